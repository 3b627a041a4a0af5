"""
Cylinders and Morita obstructions
=================================

A line defect on a cylinder must satisfy two dimension identities. The same
dimensions give cheap necessary conditions for Morita equivalence.
"""

from fuscat import catalog
from fuscat.fact_homology import CYLINDER, SurfaceSpec, fh_cylinder_check, morita_necessary
from fuscat.fp_dimension import fpdims

ising = catalog.embedding("ising")
dC, dE = fpdims(ising.target.ring), fpdims(ising.base.ring)
for fp in (4.0, 2.0):
    rep = fh_cylinder_check(ising, SurfaceSpec(variant=CYLINDER, defect_fpdim=fp), dC, dE)
    print(f"defect FPdim {fp}: ok={rep.ok}")
    for check in rep.checks:
        print("  ", check)
    print("  ", rep.conclusion)

###############################################################################
# Different global dimensions rule out an equivalence; equal ones prove
# nothing.

fib, toric = catalog.embedding("fibonacci"), catalog.embedding("toric_code")
print(morita_necessary(fib, ising).verdict)
print(morita_necessary(ising, toric).verdict)
