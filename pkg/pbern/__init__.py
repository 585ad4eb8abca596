"""pbern - Exact p-Bernoulli numbers and a machine check of their closed-form EGF."""

__version__ = "0.1.0"
