"""Plain result records shared by the library, the CLI, and the tests."""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class LawReport:
    law: str
    instance: str
    trials: int
    seed: int | None
    status: str  # "pass" | "fail"
    witness: dict | None

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ContentReport:
    """Both sides of the content product comparison, rendered canonically.

    dm_exponent is 0 exactly when the pair is Gaussian; it is left as None
    when the caller did not search for it.
    """

    instance: str
    f: str
    g: str
    content_f: str
    content_g: str
    content_fg: str
    product: str
    gaussian: bool
    dm_exponent: int | None
    witness: dict | None

    def to_dict(self):
        return asdict(self)
