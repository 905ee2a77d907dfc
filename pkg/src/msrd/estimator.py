"""scikit-learn style encoder wrapping the MSRD construction.

``MSRDEncoder(q=2, sizes=(4, 2), distance=3).fit().transform(messages)``
maps each row of base-field symbols (integers in ``range(q)``) to the
flattened codeword: the t block matrices over F_q, row-major,
concatenated.  Parameters follow the usual estimator conventions, so the
encoder can sit in a ``Pipeline`` and be cloned or grid-searched.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .constructions import construct
from .verify import BatchEvaluator


class MSRDEncoder(TransformerMixin, BaseEstimator):
    """Linear encoder for an explicitly constructed MSRD code.

    Parameters
    ----------
    q : int
        Size of the base field (a prime power).
    sizes : tuple of int
        Strictly decreasing block sizes n_1 > ... > n_t.
    distance : int
        Designed minimum sum-rank distance.

    Attributes
    ----------
    code_ : LinearSumRankCode
    n_features_in_ : int
        Message length k (dimension of the code).
    n_features_out_ : int
        Flattened codeword length, sum of n_i^2.
    """

    def __init__(self, q=2, sizes=(4, 2), distance=3):
        self.q = q
        self.sizes = sizes
        self.distance = distance

    def fit(self, X=None, y=None):
        self.code_ = construct(self.q, tuple(self.sizes), self.distance)
        self.n_features_in_ = self.code_.k
        self.n_features_out_ = self.code_.shape.ambient_dimension
        self._evaluator = BatchEvaluator(self.code_)
        if X is not None:
            self._validate(X)
        return self

    def _validate(self, X) -> np.ndarray:
        X = check_array(X, dtype=np.int64, ensure_min_samples=1)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, but {type(self).__name__} expects {self.n_features_in_}"
            )
        if X.size and (X.min() < 0 or X.max() >= self.code_.shape.q):
            raise ValueError(f"message symbols must lie in [0, {self.code_.shape.q})")
        return X

    def transform(self, X):
        check_is_fitted(self, "code_")
        return self._evaluator.codewords(self._validate(X))

    def sum_rank_weights(self, X):
        """Sum-rank weight of the codeword encoding each message row."""
        check_is_fitted(self, "code_")
        return self._evaluator.weights(self._validate(X))
