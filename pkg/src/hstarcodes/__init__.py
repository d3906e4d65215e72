"""Lattice simplices with h*-binomials, torus subgroups, codes over F_p and
generalized Bernoulli numbers of finite fields."""

__version__ = "0.1.0"
