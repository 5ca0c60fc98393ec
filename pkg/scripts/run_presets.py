"""Run every named preset with its default parameters and print the reports."""
import sys

from specmeasure.cli import PRESETS, run_preset


def main() -> int:
    failed = []
    for name in PRESETS:
        lines, ok = run_preset(name, {})
        print(f"== {name}: {'PASS' if ok else 'FAIL'}")
        for line in lines:
            print(f"   {line}")
        if not ok:
            failed.append(name)
    if failed:
        print("failed:", ", ".join(failed))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
