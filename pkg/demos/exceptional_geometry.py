"""The geometry that decides when two far Right moves stay harmless.

For games ({a,b},{c,d}) the troublesome (c,d) pairs cluster along finitely
many lines through the origin (points whose coordinates share a large
common factor).  If (c,d) keeps enough 1-norm distance from those lines,
the outcome sequence is known exactly: isolated P and N islands in a sea
of L, laid out on a doubly indexed grid of intervals.
"""

from fractions import Fraction

from partizan import (
    TSetParams,
    interval_family,
    interval_family_violations,
    interval_oracle,
    make_ruleset,
    outcome_sequence,
    t_distance,
    t_lines,
    t_membership,
    two_vs_two_condition,
)


def main() -> None:
    alpha = Fraction(2)
    print(f"threshold alpha = {alpha}: lines u/v with coprime u, v <= {int(alpha)}")
    for line in t_lines(alpha):
        print(f"  slope {line.u}/{line.v}: points {line.point_at(1)}, {line.point_at(2)}, ...")

    params = TSetParams(shift=2, alpha=alpha)
    for x, y in ((3, 3), (3, 6), (3, 100)):
        member = t_membership(x, y, params)
        dist = t_distance(x, y, params)
        print(f"  ({x},{y}) shifted by 2: member={member}, distance={dist}")

    print("\ndistance condition for ({1,2},{c,d})")
    for c, d in ((3, 6), (3, 100)):
        report = two_vs_two_condition(1, 2, c, d)
        verdict = "holds" if report.holds else "fails"
        print(f"  (c,d)=({c},{d}): distance {report.distance} vs threshold"
              f" {report.threshold} -> {verdict}")

    print("\ninterval grid for ({1,2},{3,100}), where the condition holds")
    fam = interval_family(1, 2, 3, 100)
    print(f"  P intervals: {[span for _, span in fam.p_intervals]}")
    print(f"  N intervals: {[span for _, span in fam.n_intervals]}")
    pred = interval_oracle(1, 2, 3, 100)
    span = pred.form.preperiod_len + 10
    actual = outcome_sequence(make_ruleset((1, 2), (3, 100)), span).word
    print(f"  predicted word == engine word up to {span}: {pred.form.expand(span) == actual}")

    print("\nstructural audit of the interval grid")
    clean = interval_family(1, 2, 3, 100)
    print(f"  (1,2,3,100): violations = {interval_family_violations(clean)}")
    # with c < a+b a P island may brush the guard window before an N island;
    # the predicted labels are still exact, Left just wins there a move early
    edge = interval_family(3, 6, 7, 252)
    for v in interval_family_violations(edge):
        print(f"  (3,6,7,252): {v}")
    word = outcome_sequence(make_ruleset((3, 6), (7, 252)), 300).word
    print(f"  (3,6,7,252) predicted word still exact:"
          f" {edge.to_eventual_form().expand(300) == word}")


if __name__ == "__main__":
    main()
