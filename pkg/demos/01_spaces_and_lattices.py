"""
Finite preordered spaces and their subset lattices
==================================================

A space here is a carrier 0..n-1, a topology given as bitmask opens, and an
independent preorder given as row masks.  This walkthrough builds a few,
runs the set operators, and looks at the opens / up-set lattices.
"""

from adframe import (closure, interior, lattice_analyze, make_space,
                     specialization_preorder, subset_lattice)
from adframe.bits import bits_of
from adframe.finord import downclose, upclose

# The two-point space with one open point.  Points are 0 and 1, the set
# {1} is open, and the preorder says 1 <= 0 (deliberately opposite to the
# specialization order so the two structures stay distinguishable).
term = make_space(2, [[], [1], [0, 1]], pairs=[[1, 0]])
print("opens:", [bits_of(u) for u in term.opens])
print("order rows:", term.leq)

# closure of the open point is everything; closure of the closed point is itself
print("cl {1} =", bits_of(closure(term, 0b10)))
print("cl {0} =", bits_of(closure(term, 0b01)))
print("int {0} =", bits_of(interior(term, 0b01)))

# up/down closure use the preorder, not the topology
print("up {1} =", bits_of(upclose(term, 0b10)), " down {0} =", bits_of(downclose(term, 0b01)))

# specialization: x <= y iff every open containing x contains y
print("specialization:", specialization_preorder(term))

# generators are completed into a topology on request
sq = make_space(4, [[0], [1], [2], [3]], complete=True)
print("completed discrete opens:", len(sq.opens))

# the two subset lattices that drive everything later
omega = subset_lattice(term, "opens")
ell = subset_lattice(term, "upsets")
print("opens lattice size:", omega.m, " up-set lattice size:", ell.m)
print("opens labels:", [bits_of(x) for x in omega.labels])
print("upset labels:", [bits_of(x) for x in ell.labels])

# both are distributive; the analysis also lists the (co)primes used by
# the point enumeration
info = lattice_analyze(ell)
print("distributive:", info.distributive)
print("primes:", info.primes, " coprimes:", info.coprimes)
print("pitchfork pairs:", info.pitchfork)
