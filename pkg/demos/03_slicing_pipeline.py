# From a two-variable 0/1 prefix and a recurrence to a rational function.
#
# The recurrence's constant terms q(a) give a finite value set Gamma and the
# primes that may appear; G = F * sum_a q(a) x^(a+N) is cut into slices along one
# axis, each slice is fitted in one variable, and the pieces are put back together.

from finiteseries import DensePrefix, MultiCoeffRecurrence, run_pipeline_d2

f = DensePrefix.from_function((40, 40), lambda i, j: int(i % 2 == 0))
rec = MultiCoeffRecurrence(2, {(0, 0): 1, (2, 0): -1}, 2)
rep = run_pipeline_d2(f, rec)

print("Gamma:", *rep.gamma.sorted())
print("primes:", sorted(rep.primes))
print("slicing axis:", rep.axis, "last nonzero slice:", rep.bound)
for i, s in enumerate(rep.slices):
    print(f"  slice {i}:", s)
print("F =", rep.gf, "verified on", f.valid, ":", rep.verified)
