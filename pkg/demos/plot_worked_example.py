"""
Converting a quasi-symmetric expansion to Schur functions
=========================================================

The Schur function of shape (4,1) expands over standard tableaux as
F[4,1] + F[3,2] + F[2,3] + F[1,4].  Reading each F as an s and
straightening recovers s[4,1], because the other three terms cancel.
"""

from quasischur import Composition, FExpansion, F_to_schur, raise_chain, schur_to_F, straighten

f = schur_to_F((4, 1))
print("F-expansion:", f)

# each term on its own
for comp in f:
    print(f"  s{comp} -> {straighten(comp)}")

print("Schur expansion:", F_to_schur(f))

# straightening as a chain of raises; (1,1,3) collapses to zero
for L in [(1, 4), (1, 1, 3)]:
    chain = raise_chain(L)
    for step in chain.steps:
        print(f"  {step.before} -> {step.after}  (i={step.index})")
    print(f"  {Composition(L)}: {chain.result}")

# mixed input: linear combinations work term by term
print(F_to_schur(FExpansion({(3, 2): 3, (2, 3): 5, (1, 4): 2})))
