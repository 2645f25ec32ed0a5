# ==============================================================================
# test_weighted_stats.py — Survey-weighted statistics tests
# ==============================================================================
# Purpose: Test weighted mean, standard deviation and quantiles on hand-computed samples
# Sections: Imports, Mean and Std Tests, Quantile Tests
# ==============================================================================

# Standard Library --------------------------------------------------------------
import math

# Third Party -------------------------------------------------------------------
import pytest

# Core (App-wide) ---------------------------------------------------------------
from core.utils.weighted_stats import weighted_mean, weighted_median, weighted_quantile, weighted_std


class TestMeanAndStd:
    """Test the weighted moments."""

    def test_weighted_mean(self):
        """Test a heavy weight pulls the mean toward its value."""
        # Act & Assert
        assert weighted_mean([1, 2, 3, 4], [1, 1, 1, 7]) == pytest.approx(3.4)

    def test_equal_weights_population_std(self):
        """Test equal weights reproduce the population standard deviation."""
        # Act & Assert
        assert weighted_std([1, 2, 3, 4], [2, 2, 2, 2]) == pytest.approx(math.sqrt(1.25))

    def test_empty_sample_rejected(self):
        """Test an empty sample cannot be summarized."""
        # Act & Assert
        with pytest.raises(ValueError, match="empty"):
            weighted_mean([], [])

    def test_mismatched_lengths_rejected(self):
        """Test values and weights must align."""
        # Act & Assert
        with pytest.raises(ValueError):
            weighted_std([1, 2], [1])


class TestQuantiles:
    """Test the cumulative-weight quantile rule."""

    def test_equal_weights_quartiles(self):
        """Test quartiles of 1..4 with equal weights take the lower value at exact halves."""
        # Arrange
        values, weights = [4, 1, 3, 2], [1, 1, 1, 1]

        # Act & Assert
        assert weighted_quantile(values, weights, 0.25) == 1
        assert weighted_median(values, weights) == 2
        assert weighted_quantile(values, weights, 0.75) == 3
        assert weighted_quantile(values, weights, 1.0) == 4
        assert weighted_quantile(values, weights, 0.0) == 1

    def test_skewed_weights_move_the_median(self):
        """Test most of the weight on the largest value makes it the median."""
        # Act & Assert
        assert weighted_median([1, 2, 3, 4], [1, 1, 1, 7]) == 4

    def test_fractional_weights(self):
        """Test weights of 0.1 that do not sum exactly in binary still split at the half."""
        # Act & Assert
        assert weighted_median([10, 20], [0.1 + 0.2, 0.3]) == 10

    def test_scale_invariance(self):
        """Test multiplying every weight by a constant leaves quantiles unchanged."""
        # Arrange
        values, weights = [5, 9, 1, 7, 3], [2, 1, 4, 1, 2]

        # Act & Assert
        for q in (0.1, 0.25, 0.5, 0.75, 0.9):
            assert weighted_quantile(values, weights, q) == weighted_quantile(values, [w * 37 for w in weights], q)

    def test_out_of_range_q_rejected(self):
        """Test q must lie in [0, 1]."""
        # Act & Assert
        with pytest.raises(ValueError):
            weighted_quantile([1], [1], 1.5)
