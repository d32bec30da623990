#!/usr/bin/env python3
import os
import subprocess
import sys

import click


def git_ls_files():
    p = subprocess.Popen(
        ["git", "ls-files"], stdout=subprocess.PIPE, stderr=subprocess.DEVNULL
    )
    try:
        for line in p.stdout:
            yield line.strip().decode()
    finally:
        if p.wait() != 0:
            raise subprocess.CalledProcessError(p.returncode, p.args)


def walk_files():
    yield "ci.py"
    yield "setup.py"
    for top in ("sigmadual", "test"):
        for dirpath, _, filenames in os.walk(top):
            for filename in sorted(filenames):
                yield os.path.join(dirpath, filename)


def py_files():
    try:
        paths = list(git_ls_files())
    except (OSError, subprocess.CalledProcessError):
        paths = list(walk_files())
    for path in paths:
        if path.endswith(".py"):
            yield path


@click.group()
def main():
    pass


@main.command(help="Run flake8 over the tracked Python files")
def lint():
    sys.exit(subprocess.call([sys.executable, "-m", "flake8", *py_files()]))


@main.command(help="Run the unit tests")
@click.option("--long", is_flag=True, help="Include the long sweeps")
def test(long):
    env = dict(os.environ)
    if long:
        env["SIGMADUAL_LONG_TESTS"] = "1"
    args = [sys.executable, "-m", "unittest", "discover", "-s", "test", "-t", "."]
    sys.exit(subprocess.call(args, env=env))


if __name__ == "__main__":
    main()
