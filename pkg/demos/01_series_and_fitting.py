# Expanding rational functions and recovering them from coefficients.
#
# Everything is exact: coefficients are Fractions, and a fitted P/Q is only
# returned after its expansion reproduces every coefficient it was given.

from finiteseries import DensePrefix, RationalGF, guess_rational, rational_fit, rf_equal, series_expand

# %% A two-variable geometric series has its coefficients on the diagonal.
diag = RationalGF.parse("1/(1-x*y)", 2)
for row in series_expand(diag, (5, 5)).tolist():
    print(*row)

# %% Fitting goes the other way. Here we only know the 0/1 pattern.
pattern = DensePrefix.from_function((12, 12), lambda i, j: int(i == j))
print(rational_fit(pattern, (0, 0), (1, 1)))

# %% Without degree bounds, denominators (k, k) are tried in turn.
f = series_expand(RationalGF.parse("(1+2*x*y)/((1-x^2)*(1-y))", 2), (16, 16))
g = guess_rational(f)
print(g, rf_equal(g, RationalGF.parse("(1+2*x*y)/((1-x^2)*(1-y))", 2)))

# %% A series that is not rational admits no fit with small boxes.
parabola = DensePrefix.from_function((20, 20), lambda i, j: int(j == i * i))
try:
    rational_fit(parabola, (4, 4), (4, 4))
except Exception as exc:
    print(type(exc).__name__, exc)
