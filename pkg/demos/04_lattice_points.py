# Lattice points on varieties: linear systems, plane curves, and two worked examples.

from fractions import Fraction

from finiteseries import LinearSystem, curve_gf, linear_system_gf, mahler_growth_witness, minimal_solutions, np3_demo
from finiteseries.poly import parse_poly

# %% x1 + x2 = x3 is a free monoid on (1,0,1) and (0,1,1).
sys_ = LinearSystem.equalities([[1, 1, -1]])
print(minimal_solutions(sys_, 6))
print(linear_system_gf(sys_, (12, 12, 12)))

# %% Points of (x - y)(x + y - 3) = 0 in N^2.
gf, rep = curve_gf([parse_poly("x-y", nvars=2), parse_poly("x+y-3", nvars=2)])
print(gf, rep.verified)

# %% The parabola y = x^2 has infinitely many points that no line carries.
gf, rep = curve_gf([parse_poly("x^2-y", nvars=2)])
print(rep.status, rep.witness, rep.fit_failed_up_to)

# %% x - y + 2z^2 + zy^2 = 0 only has the points (n, n, 0).
rep = np3_demo(20)
print(rep["zeros_are_diagonal"], rep["gf"], "reference formula agrees:", rep["reference_gf_matches"])

# %% 2^(m^2) outgrows (m!)^c for every fixed c.
values = [2 ** (m * m) for m in range(61)]
for c in (1, 5, Fraction(15, 2)):
    print(c, mahler_growth_witness(values, c, 60))
