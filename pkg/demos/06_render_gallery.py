"""Produce a small SVG gallery in ./out/ using the command-line interface."""
import pathlib

from inconic.cli import main

out = pathlib.Path("out")
out.mkdir(exist_ok=True)

jobs = [
    (["render", "--vertices", "0,0 1,0 4,2 0,1", "--maxarea",
      "--out", str(out / "max_area.svg")],
     "the maximal-area ellipse of the wide quadrilateral"),
    (["render", "--vertices", "0,0 1,0 3,2 0,1", "--n", "7",
      "--out", str(out / "family.svg")],
     "seven inscribed ellipses swept along the center segment"),
    (["render", "--vertices", "0,0 1,0 3,2 0,1", "--center", "1,0.75",
      "--out", str(out / "single.svg")],
     "one inscribed ellipse with its four contact points"),
]

for argv, blurb in jobs:
    code = main(argv)
    print(f"exit {code}: {argv[-1]}  <- {blurb}")
