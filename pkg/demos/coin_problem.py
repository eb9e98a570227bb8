"""Coin representability as a game, and what it does to preperiods.

Which amounts can be paid with coins of fixed denominations?  The largest
unpayable amount (the Frobenius number) reappears in game terms twice: a
tiny game encodes the payment question directly, and for Right-hand move
set {1} it pins down exactly where a game's outcome sequence settles.
"""

from partizan import (
    CoinSet,
    detect_eventual_form,
    frobenius,
    knapsack_to_game,
    make_ruleset,
    outcome,
    representable,
)


def main() -> None:
    coins = CoinSet((6, 9, 20))
    print(f"coins {coins}: largest unpayable amount = {frobenius(coins)}")
    for n in (42, 43, 44):
        print(f"  {n}: {'payable' if representable(coins, n) else 'not payable'}")

    print("\nthe payment question as a game position")
    coins = CoinSet((3, 5))
    for n in (7, 8):
        rules, heap = knapsack_to_game(coins, n)
        left = outcome(rules, heap).oL
        print(f"  pay {n} with {coins}? game {rules} at heap {heap}:"
              f" Left first -> {left}"
              f" ({'no' if left == 'L' else 'yes'}, representable={representable(coins, n)})")
    print("  Left moving first loses exactly on the payable amounts.")

    print("\nwhere ({moves}, {1}) settles: the last non-L position")
    for left_moves in ((4, 7), (2, 3), (3, 8)):
        rules = make_ruleset(left_moves, (1,))
        shifted = CoinSet(tuple(m + 1 for m in left_moves))
        form = detect_eventual_form(rules)
        settle = form.preperiod_len - 1
        print(f"  {rules}: preperiod ends at {settle},"
              f" frobenius({shifted}) = {frobenius(shifted)}")


if __name__ == "__main__":
    main()
