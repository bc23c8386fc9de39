"""Run every verification suite through the CLI and print one line each."""
import io
import sys

from multicover.cli import main

SUITES = [
    ["verify", "sizes", "--exhaustive-n", "6", "--m", "2,3"],
    ["verify", "lattice-criterion", "--exhaustive-n", "6", "--m", "2,3"],
    ["verify", "left-modular", "--exhaustive-n", "7", "--m", "2,3"],
    ["verify", "trim", "--m", "2,3"],
    ["verify", "completion", "--pairs", "3:2,3:3,4:2,4:3,5:2"],
    ["verify", "conjecture", "--n-max", "5", "--m-max", "4"],
]

STATUS = {0: "holds", 4: "FAILS", 5: "budget exceeded"}


def run() -> int:
    worst = 0
    for argv in SUITES:
        code = main(argv, out=io.StringIO())
        print(f"{' '.join(argv[1:]):60s} {STATUS.get(code, f'exit {code}')}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(run())
