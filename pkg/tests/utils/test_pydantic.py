import json
import typing as t
from fractions import Fraction

import pytest
from pydantic import ValidationError

from oreh.core.poly import Poly
from oreh.utils.pydantic import PydanticModel

X = Poly.x()


class Entry(PydanticModel):
    a: Fraction
    r: Poly
    note: t.Optional[str] = None


def test_json_encodes_scalars_and_polys() -> None:
    entry = Entry(a=Fraction(-1, 2), r=X**2 + 1)
    assert json.loads(entry.json()) == {"a": "-1/2", "r": "x^2 + 1"}


def test_dict_excludes_none() -> None:
    entry = Entry(a=Fraction(1), r=X)
    assert entry.dict() == {"a": Fraction(1), "r": X}
    assert entry.dict(exclude_none=False)["note"] is None


def test_extra_fields_forbidden() -> None:
    with pytest.raises(ValidationError):
        Entry(a=Fraction(1), r=X, b=0)
