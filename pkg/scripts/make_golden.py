"""Regenerate the CLI golden files in tests/golden/ (review the diff!)."""
import json
from pathlib import Path

from vminor.cli import run

CASES = [
    ("gen_cycle5", ["gen", "cycle", "5"], ""),
    ("gen_fan2_edges", ["gen", "fan", "2", "--format", "edges"], ""),
    ("gen_incomplete_fan", ["gen", "incomplete-fan", "5", "0,2,5"], ""),
    ("gen_unknown", ["gen", "nosuchfamily"], ""),
    ("check_pm_c5_in_c3", ["check", "pm", "-", "Bw"], "Dhc\n"),
    ("check_pm_c3_in_c7", ["check", "pm", "Bw", "FhCKG"], ""),
    ("check_vm_fan2_is_c3", ["check", "vm", "Bw", "Bw"], ""),
    ("check_two_stdins", ["check", "pm", "-", "-"], "Bw\n"),
    ("check_bad_graph6", ["check", "vm", "Bw", "D!c"], ""),
    ("apply_shorten", ["apply", "Dhc", "-"], "pv 0 1\ndel 0\ndel 1\n"),
    ("apply_bad_op", ["apply", "Dhc", "lc 0;sm 0;del 9"], ""),
    ("apply_bad_trace_text", ["apply", "Dhc", "-"], "flip 0\n"),
    ("extract_cycle_petersen", ["extract", "cycle", "IheA@GUAo", "-k", "3"], ""),
    ("extract_cycle_tree", ["extract", "cycle", "Ch", "-k", "3"], ""),
    ("extract_ladder_to_fan", ["extract", "ladder-to-fan", "-k", "3"], ""),
    ("extract_incomplete_fan", ["extract", "incomplete-fan", "-", "-k", "3"], "FhCLG\n"),
    ("extract_missing_host", ["extract", "odd-gap", "-k", "3"], ""),
    ("color_petersen", ["color", "IheA@GUAo"], ""),
    ("analyze_c5", ["analyze", "Dhc"], ""),
    ("no_subcommand", [], ""),
]


def main():
    root = Path(__file__).resolve().parent.parent / "tests" / "golden"
    root.mkdir(exist_ok=True)
    manifest = []
    for name, argv, stdin in CASES:
        code, out, err = run(argv, stdin)
        (root / f"{name}.out").write_text(out)
        (root / f"{name}.err").write_text(err)
        manifest.append({"name": name, "argv": argv, "stdin": stdin, "code": code})
        print(f"{code}  {name}")
    (root / "cases.json").write_text(json.dumps(manifest, indent=1) + "\n")


if __name__ == "__main__":
    main()
