"""Macaulay growth arithmetic: expansions, bounds, O-sequences, SI-sequences.

Run: python3 demos/growth_bounds.py
"""

from levellab import (
    HVector,
    binomial_expansion,
    is_o_sequence,
    is_si_sequence,
    macaulay_upper_bound,
    min_prev_entry,
    o_sequence_violation,
    prev_entry_range,
)


def main() -> None:
    # Every positive integer has a unique greedy expansion in degree-i
    # binomials; the growth bound shifts both indices up by one.
    for n, i in ((25, 2), (10, 3), (57, 4)):
        exp = binomial_expansion(n, i)
        print(f"{n} in degree {i}:  {n} = {exp},  next degree at most "
              f"{macaulay_upper_bound(n, i)}")

    # The same arithmetic run backwards: if some degree has dimension n,
    # the degree below it cannot be too small, and with r variables the
    # derivative cap r*n limits it from above.
    print()
    for n, d, r in ((25, 2, 7), (25, 2, 10), (4, 3, 3)):
        lo = min_prev_entry(n, d)
        lo2, hi = prev_entry_range(n, d, r)
        print(f"value {n} in degree {d}, {r} variables: "
              f"previous entry in {lo2}..{hi} (floor alone: {lo})")

    # O-sequences obey the growth bound everywhere.  The second vector
    # jumps 5 -> 8 in one degree while the bound allows only 7.
    print()
    for text in ("1,3,5,7,7,5,3,1", "1,3,5,8,8,5,3,1", "1,3,6,8,8,6,3,1"):
        h = HVector.parse(text)
        verdict = "O-sequence" if is_o_sequence(h) else \
            f"violates growth ({o_sequence_violation(h)})"
        si = "SI" if is_si_sequence(h) else "not SI"
        print(f"({h}): {verdict}; {si}")


if __name__ == "__main__":
    main()
