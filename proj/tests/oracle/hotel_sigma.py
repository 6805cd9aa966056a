"""Independent exact-arithmetic oracle for the hotel example credibilities.

Recomputes concordance (= credibility, since the example has no veto) for
every ordered (action, profile) pair with Python fractions and writes
hotel_sigma_oracle.csv next to the other fixtures:

    from,to,numerator,denominator,value

Run from the repository root:  python3 tests/oracle/hotel_sigma.py
"""

from fractions import Fraction
from pathlib import Path

WEIGHTS = [5, 4, 3, 3, 3]
MINIMIZE = [True, True, False, False, False]
# (intercept, slope) anchored on the worse of the two performances.
INDIFFERENCE = [(250, Fraction(3, 100)), (50, Fraction(5, 100)), (1, 0), (1, 0), (1, 0)]
PREFERENCE = [(500, Fraction(5, 100)), (100, Fraction(7, 100)), (2, 0), (2, 0), (2, 0)]

ACTIONS = {
    "a1": (13000, 3000, 4, 4, 4),
    "a2": (15000, 2500, 6, 2, 7),
    "a3": (10900, 3400, 6, 6, 1),
    "a4": (15500, 3500, 6, 6, 6),
    "a5": (15000, 2600, 6, 1, 2),
}
PROFILES = {
    "b11": (18000, 4000, 1, 1, 1),
    "b21": (17000, 3500, 2, 2, 1),
    "b22": (16500, 3700, 1, 2, 1),
    "b31": (15350, 3200, 3, 1, 2),
    "b41": (14250, 2850, 3, 4, 3),
    "b42": (13750, 3150, 4, 3, 3),
    "b51": (12650, 2650, 4, 4, 5),
    "b61": (11500, 2100, 5, 6, 5),
    "b62": (11000, 2500, 6, 5, 7),
    "b71": (10000, 2000, 7, 7, 7),
}


def concordance(x, y):
    total = Fraction(0)
    for j, w in enumerate(WEIGHTS):
        gx, gy = Fraction(x[j]), Fraction(y[j])
        delta = gy - gx if MINIMIZE[j] else gx - gy
        worse = max(gx, gy) if MINIMIZE[j] else min(gx, gy)
        q = INDIFFERENCE[j][0] + INDIFFERENCE[j][1] * worse
        p = PREFERENCE[j][0] + PREFERENCE[j][1] * worse
        if delta >= -q:
            total += w
        elif delta >= -p:
            total += w * (delta + p) / (p - q)
    return total / sum(WEIGHTS)


def main():
    out = Path(__file__).resolve().parent.parent / "fixtures" / "hotel_sigma_oracle.csv"
    lines = ["from,to,numerator,denominator,value"]
    for a, ga in ACTIONS.items():
        for b, gb in PROFILES.items():
            for src, dst, s in ((a, b, concordance(ga, gb)), (b, a, concordance(gb, ga))):
                lines.append(f"{src},{dst},{s.numerator},{s.denominator},{float(s)!r}")
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
