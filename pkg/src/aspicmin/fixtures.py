"""Worked theories bundled with the package."""

from importlib import resources

from .dsl import parse_theory

NAMES = (
    "example1",
    "circular_premise",
    "circular_rules",
    "redundant",
    "loop",
    "minimality",
    "same_conclusion",
)


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("theories").joinpath(f"{name}.aspic").read_text(encoding="utf-8")


def load_fixture(name: str):
    return parse_theory(fixture_text(name))


def all_fixtures() -> dict:
    return {name: load_fixture(name) for name in NAMES}
