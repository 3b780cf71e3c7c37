import numpy as np
import pytest

import yulesimon as ys
from yulesimon import Chain, FrequencySample, McmcConfig, PosteriorSummary

from conftest import tv_distance

# Regression pin: exact grid posterior of the hits data under the
# loss-based M=20 prior (computed once at the default series tolerance).
HITS_M20_POSTERIOR = np.array(
    [
        4.1343341304148923e-01,
        2.5253588604879040e-01,
        1.6034587770746939e-01,
        9.2701446248221547e-02,
        4.7889523735395463e-02,
        2.1585193149611472e-02,
        8.2317328079177070e-03,
        2.5514285008833462e-03,
        6.0915747939602649e-04,
        1.0411785582717553e-04,
        1.1497012446952774e-05,
        7.0690027370229068e-07,
        1.9346706372088048e-08,
        1.6532881328088794e-10,
        2.4229971000016913e-13,
        2.0146588941194075e-17,
        9.3337434980348779e-24,
        6.1428182083652524e-35,
        6.6814643378014053e-61,
    ]
)


class TestConfigAndTypes:
    def test_config_validation(self):
        with pytest.raises(ValueError):
            McmcConfig(iterations=100, burn_in=100, seed=1)
        with pytest.raises(ValueError):
            McmcConfig(iterations=100, burn_in=20, seed=1, proposal_scale=0.0)

    def test_chain_validation(self):
        cfg = McmcConfig(iterations=10, burn_in=2, seed=0)
        with pytest.raises(ValueError):
            Chain(np.full(5, 0.5), 0.5, cfg)  # wrong length
        with pytest.raises(ValueError):
            Chain(np.array([0.5] * 7 + [1.0]), 0.5, cfg)  # boundary draw

    def test_summary_ordering(self):
        with pytest.raises(ValueError):
            PosteriorSummary(mean=0.5, median=0.3, ci_low=0.4, ci_high=0.6)


class TestSummarize:
    def test_constant_chain(self):
        cfg = McmcConfig(iterations=100, burn_in=0, seed=0)
        summary = ys.summarize(Chain(np.full(100, 0.4), 1.0, cfg))
        for value in (summary.mean, summary.median, summary.ci_low, summary.ci_high):
            assert value == pytest.approx(0.4, abs=1e-15)

    def test_symmetric_grid_median(self):
        cfg = McmcConfig(iterations=9, burn_in=0, seed=0)
        chain = Chain(np.arange(1, 10) / 10.0, 1.0, cfg)
        assert ys.summarize(chain).median == pytest.approx(0.5)

    def test_type7_quantiles(self):
        draws = np.linspace(0.01, 0.99, 1000)
        cfg = McmcConfig(iterations=1000, burn_in=0, seed=0)
        summary = ys.summarize(Chain(draws, 1.0, cfg))
        assert summary.ci_low == pytest.approx(np.quantile(draws, 0.025))
        assert summary.ci_high == pytest.approx(np.quantile(draws, 0.975))


class TestContinuousSampler:
    def test_deterministic(self, hits):
        cfg = McmcConfig(iterations=2_000, burn_in=500, seed=123)
        prior = ys.JeffreysPrior()
        a = ys.sample_posterior_continuous(hits, prior, cfg)
        b = ys.sample_posterior_continuous(hits, prior, cfg)
        assert np.array_equal(a.draws, b.draws)
        assert a.acceptance_rate == b.acceptance_rate

    def test_single_observation_support_and_mixing(self):
        data = FrequencySample(((1, 1),))
        cfg = McmcConfig(iterations=4_000, burn_in=1_000, seed=3)
        chain = ys.sample_posterior_continuous(data, ys.JeffreysPrior(), cfg)
        assert np.all(chain.draws > 0.0) and np.all(chain.draws < 1.0)
        assert 0.05 < chain.acceptance_rate < 0.95

    def test_budget_stability_on_hits(self, hits):
        # 10k -> 100k iterations moves the summary by < 0.01
        prior = ys.JeffreysPrior()
        short = ys.summarize(
            ys.sample_posterior_continuous(hits, prior, McmcConfig(10_000, 2_000, seed=5))
        )
        long = ys.summarize(
            ys.sample_posterior_continuous(hits, prior, McmcConfig(100_000, 20_000, seed=6))
        )
        assert abs(short.mean - long.mean) < 0.01
        assert abs(short.median - long.median) < 0.01


class TestDiscreteSampler:
    def test_draws_live_on_support(self, hits, loss_prior_10):
        cfg = McmcConfig(iterations=5_000, burn_in=1_000, seed=21)
        chain = ys.sample_posterior_discrete(hits, loss_prior_10, cfg)
        assert set(np.unique(chain.draws)) <= set(loss_prior_10.support)

    def test_deterministic(self, hits, loss_prior_10):
        cfg = McmcConfig(iterations=5_000, burn_in=1_000, seed=22)
        a = ys.sample_posterior_discrete(hits, loss_prior_10, cfg)
        b = ys.sample_posterior_discrete(hits, loss_prior_10, cfg)
        assert np.array_equal(a.draws, b.draws)

    @pytest.mark.parametrize("m", [10, 20])
    def test_matches_exact_enumeration(self, hits, m):
        prior = ys.loss_based_prior(m)
        cfg = McmcConfig(iterations=25_000, burn_in=5_000, seed=31)
        chain = ys.sample_posterior_discrete(hits, prior, cfg)
        exact = ys.exact_grid_posterior(hits, prior)
        empirical = np.array([(chain.draws == a).mean() for a in prior.support])
        assert tv_distance(empirical, exact.masses) < 0.02


class TestExactGridPosterior:
    def test_minimal_analytic_ratio(self):
        # uniform prior, single k=1 observation, M=3:
        # posterior ratio = f(1; 1/3)/f(1; 2/3) = (2 - 2/3)/(2 - 1/3) = 4/5
        prior = ys.GridPrior(3, np.array([1 / 3, 2 / 3]), np.array([0.5, 0.5]))
        post = ys.exact_grid_posterior(FrequencySample(((1, 1),)), prior)
        assert post.masses[0] / post.masses[1] == pytest.approx(0.8, rel=1e-12)

    def test_masses_sum_to_one(self, hits, loss_prior_10):
        post = ys.exact_grid_posterior(hits, loss_prior_10)
        assert post.masses.sum() == pytest.approx(1.0, abs=1e-13)

    def test_hits_m20_regression(self, hits, loss_prior_20):
        post = ys.exact_grid_posterior(hits, loss_prior_20)
        np.testing.assert_allclose(post.masses, HITS_M20_POSTERIOR, rtol=1e-9, atol=1e-300)


class TestPosteriorBehaviour:
    def test_hits_table_bands(self, hits):
        # the published summaries for these data (wide bands; full-precision
        # reproduction is the acceptance suite's job)
        cfg = McmcConfig(iterations=25_000, burn_in=5_000, seed=7)
        summary = ys.summarize(
            ys.sample_posterior_continuous(hits, ys.JeffreysPrior(), cfg)
        )
        assert 0.06 <= summary.mean <= 0.10
        assert 0.05 <= summary.median <= 0.09

    def test_hits_m100_bands(self, hits):
        cfg = McmcConfig(iterations=25_000, burn_in=5_000, seed=11)
        summary = ys.summarize(
            ys.sample_posterior_discrete(hits, ys.loss_based_prior(100), cfg)
        )
        assert 0.06 <= summary.mean <= 0.14
        assert 0.05 <= summary.median <= 0.11

    def test_likelihood_dominates_large_n(self):
        # n = 500 at alpha* = 0.6: both priors land within +-0.05
        data = FrequencySample.from_observations(ys.sample(0.6, 500, seed=11))
        jeff = ys.summarize(
            ys.sample_posterior_continuous(
                data, ys.JeffreysPrior(), McmcConfig(10_000, 2_000, seed=12)
            )
        )
        loss = ys.summarize(
            ys.sample_posterior_discrete(
                data, ys.loss_based_prior(10), McmcConfig(10_000, 2_000, seed=13)
            )
        )
        assert abs(jeff.median - 0.6) <= 0.05
        assert abs(loss.median - 0.6) <= 0.05
