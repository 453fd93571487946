import math

import numpy as np
import pytest

from frechetfit import (
    DomainError,
    EmptyInputError,
    FrechetParams,
    ParseError,
    SamplerConfig,
    cdf,
    quantile,
    read_samples,
    sample,
    write_samples,
)


def config(alpha=5.0, m=0.0, s=1.0, seed=42, count=1000):
    return SamplerConfig(seed=seed, count=count, params=FrechetParams(m, s, alpha))


class TestSampler:
    def test_determinism(self):
        a = sample(config())
        b = sample(config())
        assert np.array_equal(a, b)

    def test_different_seeds_differ(self):
        assert not np.array_equal(sample(config(seed=1)), sample(config(seed=2)))

    def test_support(self):
        x = sample(config(m=3.0, s=2.0, count=20000))
        assert np.all(x > 3.0)

    def test_count_validation(self):
        with pytest.raises(DomainError):
            config(count=0)

    def test_empirical_cdf_at_median(self):
        d = FrechetParams(0.0, 1.0, 2.0)
        x = sample(SamplerConfig(seed=11, count=100_000, params=d))
        frac = float(np.mean(x <= quantile(d, 0.5)))
        assert frac == pytest.approx(0.5, abs=0.005)

    @pytest.mark.parametrize("alpha", [2.0, 5.0, 10.0])
    def test_kolmogorov_smirnov(self, alpha):
        n = 10_000
        d = FrechetParams(0.0, 1.0, alpha)
        x = np.sort(sample(SamplerConfig(seed=99, count=n, params=d)))
        u = np.array([cdf(d, v) for v in x])
        i = np.arange(1, n + 1)
        ks = max(np.max(i / n - u), np.max(u - (i - 1) / n))
        assert ks < 1.63 / math.sqrt(n)

    def test_variance_matches_table(self):
        n = 1_000_000
        x = sample(SamplerConfig(seed=2024, count=n, params=FrechetParams(0.0, 1.0, 10.0)))
        from frechetfit import FrechetShape, centered_moment, sample_stats

        shape = FrechetShape(10.0)
        mu2 = centered_moment(shape, 2)
        mu4 = centered_moment(shape, 4)
        se = math.sqrt((mu4 - mu2**2) / n)
        assert abs(sample_stats(x).variance - 0.0222624) <= 3.0 * se


class TestReadSamples:
    def test_plain_values(self, tmp_path):
        p = tmp_path / "plain.txt"
        p.write_text("1.0\n2.5\n0.3\n")
        assert read_samples(p) == [1.0, 2.5, 0.3]

    def test_header_with_named_column(self, tmp_path):
        p = tmp_path / "named.txt"
        p.write_text("value\n1.0\n2.0\n")
        assert read_samples(p, column="value") == [1.0, 2.0]

    def test_multi_column_csv(self, tmp_path):
        p = tmp_path / "multi.csv"
        p.write_text("t,value\n0,1.5\n1,2.5\n")
        assert read_samples(p, column="value") == [1.5, 2.5]

    def test_header_skipped_without_column(self, tmp_path):
        p = tmp_path / "hdr.txt"
        p.write_text("value\n3.0\n4.0\n")
        assert read_samples(p) == [3.0, 4.0]

    def test_blank_lines_skipped(self, tmp_path):
        p = tmp_path / "blank.txt"
        p.write_text("1.0\n\n2.0\n\n")
        assert read_samples(p) == [1.0, 2.0]

    def test_parse_error_with_line_number(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1.0\nabc\n")
        with pytest.raises(ParseError) as exc:
            read_samples(p)
        assert exc.value.line == 2

    def test_missing_column(self, tmp_path):
        p = tmp_path / "miss.csv"
        p.write_text("a,b\n1,2\n")
        with pytest.raises(ParseError):
            read_samples(p, column="c")

    def test_empty_file(self, tmp_path):
        p = tmp_path / "empty.txt"
        p.write_text("\n\n")
        with pytest.raises(EmptyInputError):
            read_samples(p)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            read_samples(tmp_path / "nope.txt")


class TestWriteReadRoundTrip:
    def test_lossless(self, tmp_path):
        x = sample(config(count=500, seed=3))
        p = tmp_path / "rt.txt"
        write_samples(p, x)
        back = read_samples(p)
        assert np.array_equal(np.asarray(back), x)
