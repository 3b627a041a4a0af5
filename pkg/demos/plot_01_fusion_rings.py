"""
Fusion rings and Frobenius-Perron dimensions
============================================

Load the built-in Fibonacci and Ising categories, check their fusion rules
and compute dimensions by power iteration.
"""

import numpy as np

from fuscat import catalog
from fuscat.category_data import ObjectClass, fuse, validate_fusion_ring
from fuscat.fp_dimension import fpdims

fib = catalog.load("fibonacci").ring
print(fib.simples)
print(fib.fusion_matrix("tau"))

# the report lists every failed axiom; an empty one means the ring is fine
print(validate_fusion_ring(fib))

d = fpdims(fib)
print("d_tau =", d["tau"], " FPdim =", d.category_dim)
print("character residual:", d.character_residual())

###############################################################################
# Object classes are integer vectors over the simples.

tau = ObjectClass.simple(fib, "tau")
x = tau
for n in range(2, 6):
    x = fuse(x, tau)
    print(f"tau^{n} =", x)

# growth of tau^n is governed by d_tau
print(np.isclose(x.mults @ d.dims, d["tau"] ** 5))

###############################################################################
# Ising: sigma x sigma = 1 + eps

ising = catalog.load("ising").ring
sigma = ObjectClass.simple(ising, "sigma")
print(fuse(sigma, sigma))
print(fpdims(ising).dims, fpdims(ising).category_dim)
