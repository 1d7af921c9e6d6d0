#!/usr/bin/env python3
"""Replay every built-in scenario and print its tableau.

Usage: python3 scripts/replay_builtins.py [--format text|markdown]
"""

import argparse

from iqgame.engine import render_tableau, replay
from iqgame.scenarios import builtin_scenarios


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("text", "markdown"), default="text")
    args = parser.parse_args()

    for scenario in builtin_scenarios():
        state, report = replay(scenario, strict=True)
        print(f"=== {scenario.name} ===")
        print(render_tableau(state, fmt=args.format))
        print(f"moves replayed: {len(report.records)}, status: {state.status}")
        print()


if __name__ == "__main__":
    main()
