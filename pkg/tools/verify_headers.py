# Copyright (C) 2024 zenolab Development Team
#
# This file is part of zenolab
#
# zenolab is free software released under the GNU General Public License v3
# or later. You can redistribute and/or modify it under the terms of the GPL v3.
# See the LICENSE file in the project root or <https://www.gnu.org/licenses/gpl-3.0.html>.
#
# THERE IS NO WARRANTY for zenolab, as per Section 15 of the GPL v3.

# pylint: skip-file

"""
Script to verify the GPL license header of every zenolab source file.

Usage::

    python tools/verify_headers.py zenolab tests tools [--fix]

"""
import argparse
import os
import sys
from typing import List, Tuple

HEADER = """# Copyright (C) 2024 zenolab Development Team
#
# This file is part of zenolab
#
# zenolab is free software released under the GNU General Public License v3
# or later. You can redistribute and/or modify it under the terms of the GPL v3.
# See the LICENSE file in the project root or <https://www.gnu.org/licenses/gpl-3.0.html>.
#
# THERE IS NO WARRANTY for zenolab, as per Section 15 of the GPL v3.
"""

SKIP_TAG = "# zenolab: skip-header"
PROJECT_DIR = os.path.abspath(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))


def should_skip(path: str, content: str) -> bool:
    """Empty package markers and files tagged with the skip marker are exempt."""
    if os.path.basename(path) == "__init__.py" and not content.strip():
        return True
    return any(SKIP_TAG in line for line in content.splitlines()[4:30])


def with_header(content: str) -> str:
    """Replace the leading comment block of ``content`` with the license header."""
    lines = content.splitlines()
    start = next((i for i, line in enumerate(lines) if not line.startswith("#")), len(lines))
    return "\n".join([HEADER.rstrip("\n")] + lines[start:]) + "\n"


def check_file(path: str, fix: bool) -> bool:
    """Returns True if the header was already correct."""
    with open(path, "r", encoding="utf-8") as file:
        content = file.read()
    if content.startswith(HEADER) or should_skip(path, content):
        return True
    if fix:
        with open(path, "w", encoding="utf-8") as file:
            file.write(with_header(content))
    return False


def python_files(directory: str) -> List[str]:
    """Every ``.py`` file below ``directory``."""
    found = []
    for root, _, files in os.walk(directory):
        found.extend(os.path.join(root, name) for name in sorted(files) if name.endswith(".py"))
    return found


def run(directories: List[str], fix: bool) -> Tuple[int, List[str]]:
    """Check (or fix) every file; returns the number checked and the offending paths."""
    checked, offending = 0, []
    for directory in directories:
        full_path = os.path.join(PROJECT_DIR, directory)
        if not os.path.isdir(full_path):
            print(f"Directory not found: {full_path}")
            offending.append(full_path)
            continue
        for path in python_files(full_path):
            checked += 1
            if not check_file(path, fix):
                offending.append(path)
    return checked, offending


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("directories", nargs="+", help="Directories relative to the project root.")
    parser.add_argument("--fix", action="store_true", help="Rewrite offending headers in place.")
    args = parser.parse_args()

    checked, offending = run(args.directories, args.fix)
    if args.fix:
        for path in offending:
            print(f"fixed {os.path.relpath(path)}")
        print(f"{len(offending)} header(s) fixed, {checked - len(offending)} left unchanged.")
        return 0
    if offending:
        for path in offending:
            print(f"failed {os.path.relpath(path)}")
        sys.stderr.write(f"\n{len(offending)} file header(s) need updating.\n")
        return 1
    print("All file header checks passed!")
    return 0


if __name__ == "__main__":
    sys.exit(main())
