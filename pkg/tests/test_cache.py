import pytest

from transversal_lab.cache import CertificateCache
from transversal_lab.codec import decode_digraph6, encode_digraph6
from transversal_lab.errors import CacheCorrupt
from transversal_lab.graphs import BitDigraph
from transversal_lab.ramsey import DrCertificate, check_counterexample

C3 = BitDigraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def test_store_load_round_trip(tmp_path):
    cache = CertificateCache(tmp_path)
    cert = check_counterexample(C3, 3, 2)
    cache.store(cert)
    loaded = cache.load(3, 2, 3)
    assert loaded is not None
    assert loaded.digraph == C3
    assert loaded.verified_no_transitive and loaded.verified_no_independent


def test_cache_miss_returns_none(tmp_path):
    cache = CertificateCache(tmp_path)
    assert cache.load(3, 3, 8) is None


def test_tampered_file_raises(tmp_path):
    cache = CertificateCache(tmp_path)
    cert = check_counterexample(C3, 3, 2)
    path = cache.store(cert)
    # replace the digraph with a transitive triangle: same order, bad content
    tt3 = BitDigraph.from_arcs(3, [(0, 1), (0, 2), (1, 2)])
    header, _ = path.read_text().splitlines()
    path.write_text(header + "\n" + encode_digraph6(tt3) + "\n")
    with pytest.raises(CacheCorrupt):
        cache.load(3, 2, 3)


def test_header_mismatch_raises(tmp_path):
    cache = CertificateCache(tmp_path)
    cert = check_counterexample(C3, 3, 2)
    path = cache.store(cert)
    target = tmp_path / "dr-5-2-3.cert"
    target.write_text(path.read_text())
    with pytest.raises(CacheCorrupt):
        cache.load(5, 2, 3)


def test_unverified_certificate_refused(tmp_path):
    cache = CertificateCache(tmp_path)
    cert = DrCertificate(3, 2, C3, True, False)
    with pytest.raises(CacheCorrupt):
        cache.store(cert)


def test_best_order_scan(tmp_path):
    cache = CertificateCache(tmp_path)
    cache.store(check_counterexample(C3, 3, 2))
    cache.store(check_counterexample(BitDigraph.empty(1), 3, 2))
    assert cache.best_order(3, 2) == 3
    assert cache.best_order(3, 3) is None


def test_env_var_override(tmp_path, monkeypatch):
    monkeypatch.setenv("TRANSVERSAL_LAB_CACHE", str(tmp_path / "envdir"))
    cache = CertificateCache()
    cache.store(check_counterexample(C3, 3, 2))
    assert (tmp_path / "envdir" / "dr-3-2-3.cert").exists()
