# Knot invariants and template checks for the Lorenz-like templates L(m,n)
