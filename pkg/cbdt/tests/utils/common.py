import os

from cbdt.featurespace import Problem


FIXTURES_DIR = "fixtures"
EXAMPLE_IDS = ("f1", "f2", "f3", "f4")


def get_root_dir():
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def get_fixture_path(name):
    return os.path.join(
        os.path.dirname(get_root_dir()), FIXTURES_DIR, name
    )


def read_fixture(name):
    with open(get_fixture_path(name)) as fp:
        return fp.read()


def problem(*labels):
    """Problem with the labels on f1, f2, ... in order"""
    return Problem(dict(zip(EXAMPLE_IDS, [str(v) for v in labels])))
