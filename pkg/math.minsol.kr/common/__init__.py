# Common utilities shared by the math services
