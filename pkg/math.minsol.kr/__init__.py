# Math Services Package
