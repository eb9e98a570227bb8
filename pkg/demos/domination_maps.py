"""Sweep a (c,d) grid of Right move pairs and picture who dominates.

Fixing Left's moves {a,b} and varying Right's pair {c,d} paints a phase
map: most far-out cells settle into Left domination (blue), structured
resonances hand the game to Right (red) or keep it contested (green).
The sweep writes both a CSV table and a PPM image.
"""

import os
import tempfile

from partizan import domination_map, render_map, summary


def main() -> None:
    # modest window so the demo runs in seconds; widen the spans to explore
    grid = domination_map(7, 9, c_range=(10, 49), d_range=(10, 49))
    stats = summary(grid)
    print(f"games ({{7,9}},{{c,d}}) for c,d in 10..49: {stats['cells']} cells")
    for name, count in stats["counts"].items():
        if count:
            print(f"  {name:9s} {count}")
    if stats["unresolved"]:
        print(f"  unresolved {stats['unresolved']}")

    print("\nsample rows of the CSV render")
    csv_lines = render_map(grid, "csv").decode("ascii").splitlines()
    for line in csv_lines[:4] + ["..."] + csv_lines[-2:]:
        print(f"  {line}")

    out_dir = tempfile.mkdtemp(prefix="domination-")
    ppm_path = os.path.join(out_dir, "map_7_9.ppm")
    with open(ppm_path, "wb") as handle:
        handle.write(render_map(grid, "ppm"))
    print(f"\nPPM image written to {ppm_path}")
    print("palette: blue = Left dominates, red = Right dominates,"
          " green = neither, black = period not found")

    # the same sweep through the command line:
    print("\nCLI equivalent: partizan map 7 9 --c-range 10:49 --d-range 10:49"
          " --format ppm --out map.ppm")


if __name__ == "__main__":
    main()
