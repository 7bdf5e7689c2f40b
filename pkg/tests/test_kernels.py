import pytest

from reflen import kernels
from reflen.oracle import bfs_lengths, enumerate_group, reflections_of


@pytest.mark.parametrize(
    "kind,n,p",
    [("GL", 2, 2), ("GL", 2, 3), ("GL", 3, 2), ("GA", 2, 2), ("GA", 2, 3)],
)
def test_backends_agree(kind, n, p):
    table = enumerate_group(kind, n, p)
    refl = reflections_of(table)
    pure = bfs_lengths(table, refl, backend="pure").lengths
    if kernels.HAVE_SPEEDUPS:
        compiled = bfs_lengths(table, refl, backend="compiled").lengths
        assert compiled == pure
    assert bfs_lengths(table, refl).lengths == pure


def test_active_backend_reports_string():
    assert kernels.active_backend() in ("pure", "compiled")


def test_pure_env_override(monkeypatch):
    monkeypatch.setenv("REFLEN_PURE", "1")
    assert kernels.active_backend() == "pure"


def test_key_fits_guard():
    if not kernels.HAVE_SPEEDUPS:
        pytest.skip("compiled kernel not built")
    from reflen import _speedups

    assert _speedups.key_fits(4, 2)
    assert _speedups.key_fits(9, 3)
    # 65521^16 blows well past int64; the dispatcher must fall back
    assert not _speedups.key_fits(16, 65521)


def test_single_generator_cyclic_subgroup():
    table = enumerate_group("GL", 2, 3)
    # order-2 element: reaches only {I, g}
    g = next(
        i
        for i, m in enumerate(table.elements)
        if not m.is_identity() and m.mul(m).is_identity()
    )
    lt = bfs_lengths(table, {g})
    reached = [i for i in range(len(table)) if lt.reachable(i)]
    assert reached == sorted([table.identity_id, g])
    assert lt.length(g) == 1
