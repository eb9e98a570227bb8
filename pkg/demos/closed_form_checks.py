"""Closed-form predictions next to what the engine actually computes.

Several families of games have fully solved outcome sequences.  Each oracle
below states its hypothesis; when the hypothesis fails it declines with a
reason instead of guessing.  Everything an oracle asserts is checked here
against the raw position table.
"""

from partizan import (
    classify,
    construct_left_spoiler,
    construct_right_dominator,
    construct_right_fair,
    detect_eventual_form,
    make_ruleset,
    oracle_full_sequence_far,
    oracle_one_vs_one,
    oracle_two_vs_one,
    outcome,
    outcome_sequence,
    perstay_check,
)


def show(title: str, predicted: str, actual: str) -> None:
    flag = "ok" if predicted == actual else "MISMATCH"
    print(f"  {title}\n    predicted {predicted}\n    engine    {actual}  [{flag}]")


def main() -> None:
    print("single move each ({a},{b}): pure period P^a L^(b-a) N^a")
    pred = oracle_one_vs_one(2, 5)
    actual = outcome_sequence(make_ruleset((2,), (5,)), 13).word
    show("({2},{5})", pred.form.expand(13), actual)

    print("\ntwo Left moves vs one Right move: gcd decides the tail")
    for a, b, c in ((1, 5, 3), (3, 7, 1), (2, 6, 2), (1, 2, 3)):
        pred = oracle_two_vs_one(a, b, c)
        rules = make_ruleset((a, b), (c,))
        if pred.form is not None:
            print(f"  ({{{a},{b}}},{{{c}}}): periodic tail {pred.form.period!r},"
                  f" engine period {detect_eventual_form(rules).period!r}")
        else:
            print(f"  ({{{a},{b}}},{{{c}}}): class-only {pred.seq_class},"
                  f" engine says {classify(rules)}")

    print("\nfar-out Right moves: the whole sequence in closed form")
    pred = oracle_full_sequence_far(1, 2, 3, 6)
    actual = outcome_sequence(make_ruleset((1, 2), (3, 6)), 15).word
    show("({1,2},{3,6})", pred.form.expand(15), actual)
    declined = oracle_full_sequence_far(1, 2, 3, 5)
    print(f"  ({{1,2}},{{3,5}}): declined ({declined.reason})")

    print("\nstability: how much can Right's new move d disturb an L-tail?")
    base = make_ruleset((2, 3), (1,))
    for d in (7, 6):
        pred = perstay_check(base, d)
        grown = make_ruleset((2, 3), (1, d))
        if pred.applicable:
            form = detect_eventual_form(grown)
            print(f"  d={d}: predicted {pred.seq_class} with preperiod <= {pred.preperiod_bound};"
                  f" engine: {form.seq_class}, preperiod {form.preperiod_len}")
        else:
            print(f"  d={d}: declined ({pred.reason}); engine: {classify(grown)}")

    print("\nconstructions that force each behaviour from a given Left set")
    sl = (1, 2)
    dominator = construct_right_dominator(sl)
    print(f"  Right dominator for {sl}: {dominator} -> {classify(dominator)}")
    fair, n = construct_right_fair(sl)
    labels = "".join(outcome(fair, k * n).label for k in range(1, 6))
    print(f"  fair spoiler for {sl}: {fair}, multiples of {n} labelled {labels}")
    spoiler, n0 = construct_left_spoiler(sl)
    replies = "".join(outcome(spoiler, k * n0).oL for k in range(1, 6))
    print(f"  Left spoiler for {sl}: {spoiler}, oL at multiples of {n0}: {replies}")


if __name__ == "__main__":
    main()
