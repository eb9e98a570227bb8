"""Tour of the position engine: labels, sequences, periods, and classes.

Every position n of a partizan subtraction game gets one of four labels:
P (first player to move loses), N (first player wins), L (Left wins no
matter who starts), R (Right wins no matter who starts).  The label word
over n = 0, 1, 2, ... is eventually periodic, and the shape of its period
decides which player dominates in the long run.
"""

from partizan import (
    classify,
    conjugate,
    detect_eventual_form,
    make_ruleset,
    outcome,
    outcome_sequence,
    winning_moves,
)


def main() -> None:
    rules = make_ruleset((1, 2), (1, 3))
    print(f"game {rules}: Left removes 1 or 2, Right removes 1 or 3")

    seq = outcome_sequence(rules, 20)
    print(f"labels for heaps 0..20: {seq.word}")

    n = 3
    out = outcome(rules, n)
    print(f"heap {n}: Left first -> {out.oL} wins, Right first -> {out.oR} wins ({out.label})")
    print(f"  Left's winning replies at {n}:  {sorted(winning_moves(rules, n, 'left'))}")
    print(f"  Right's winning replies at {n}: {sorted(winning_moves(rules, n, 'right'))}")

    form = detect_eventual_form(rules)
    print(f"eventual form: preperiod={form.preperiod!r} period={form.period!r}")
    print(f"class: {classify(rules)} (the tail is all L, so Left dominates)")

    # swapping the move sets mirrors every label left-to-right
    mirror = conjugate(rules)
    print(f"\nconjugate game {mirror}: {detect_eventual_form(mirror).period!r} tail,"
          f" class {classify(mirror)}")

    # a game with no dominator: the period mixes L and R forever
    fair = make_ruleset((2, 3), (1, 6))
    fair_form = detect_eventual_form(fair)
    print(f"\ngame {fair}: period {fair_form.period!r}, class {fair_form.seq_class}")


if __name__ == "__main__":
    main()
