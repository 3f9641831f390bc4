# Eventually periodic sequences and the support of P-recursive sequences.

from finiteseries import (
    UniPRecurrence,
    certify_periodic,
    detect_szego,
    max_gap,
    support_classify,
    syndetic_witness,
    unroll_uni,
)

# %% A sequence over a finite alphabet. The shortest preperiod is found, so the
# leading 1 becomes part of the period 1, 0, 2.
seq = [3, 1] + [0, 2, 1] * 12
form = detect_szego(seq, 5, 6)
print([str(v) for v in form.preperiod], [str(v) for v in form.period], form.to_rational())

# The constant recurrence g(n+3) = g(n) holds from n = 1 on; the check is a
# polynomial identity per residue class, so it covers every n, not a window.
rec = UniPRecurrence.from_terms({0: -1, 3: 1}, start=1)
print("certified:", certify_periodic(rec, form))

# %% Support of a P-recursive sequence: finite or with bounded gaps.
finite = UniPRecurrence.from_terms({0: "(n-4)*(n-9)"})
print(support_classify(finite, [1] * 12, 30))

rec = UniPRecurrence.from_terms({0: "-(n^2+1)", 3: "n^2+1"})
print(support_classify(rec, [1, 0, 0], 40))

# %% The squares are neither finite nor of bounded gap.
squares = [0] * 2501
for k in range(51):
    squares[k * k] = 1
print("max gap:", max_gap(squares))
print("bounded by 50:", syndetic_witness(squares, 50))

# %% Unrolling a recurrence with polynomial coefficients.
print(*unroll_uni(UniPRecurrence.from_terms({0: -1, 1: "n+1"}), [1], 6))
