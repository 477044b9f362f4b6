"""Shared fixtures: the expensive tables are built once per session."""

from __future__ import annotations

import pytest

from crankq.theorems import VerifyContext


@pytest.fixture(scope="session")
def ctx() -> VerifyContext:
    return VerifyContext()


@pytest.fixture(scope="session")
def cranks500(ctx):
    return ctx.cranks(500)


@pytest.fixture(scope="session")
def ranks500(ctx):
    return ctx.ranks(500)


@pytest.fixture(scope="session")
def pvec1000(ctx):
    return ctx.pvec(1000)
