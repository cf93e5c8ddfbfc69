"""scikit-learn wrapper: aggregate each row of criteria scores with a seminormed integral."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from ._checks import ATOL, DomainError, InvalidInstanceError
from .capacity import Capacity, FiniteSpace, Instance, MeasurableFunction
from .integral import seminormed_integral
from .semicopula import Semicopula
from .serialize import semicopula_from_descriptor


class SeminormedIntegralTransformer(TransformerMixin, BaseEstimator):
    """Map rows of [0, 1]-valued features to ``I(mu, row)``.

    Parameters
    ----------
    semicopula : str, dict or Semicopula, default="min"
        Family name, descriptor, or semicopula object.  ``"min"`` gives the
        Sugeno integral and ``"product"`` the Shilkret integral.
    capacity : array-like of shape (2**n_features,) or Capacity, default=None
        Capacity values indexed by feature bitmask (bit ``i`` is feature ``i``).
        None uses the uniform cardinality capacity ``|A| / n_features``.

    Attributes
    ----------
    semicopula_ : Semicopula
    capacity_ : Capacity
    n_features_in_ : int
    """

    def __init__(self, semicopula="min", capacity=None):
        self.semicopula = semicopula
        self.capacity = capacity

    def fit(self, X, y=None):
        X = self._check_unit(check_array(X, dtype=float))
        n = X.shape[1]
        self.n_features_in_ = n
        if isinstance(self.semicopula, Semicopula):
            self.semicopula_ = self.semicopula
        else:
            self.semicopula_ = semicopula_from_descriptor(self.semicopula)
        space = FiniteSpace.of_size(n)
        if self.capacity is None:
            values = [bin(m).count("1") / n for m in range(1 << n)]
            self.capacity_ = Capacity(space, values)
        elif isinstance(self.capacity, Capacity):
            if len(self.capacity.space) != n:
                raise ValueError(f"capacity is defined on {len(self.capacity.space)} points, X has {n} features")
            self.capacity_ = Capacity(space, self.capacity.values)
        else:
            self.capacity_ = Capacity(space, np.ravel(self.capacity).tolist())
        if not self.capacity_.report.passed:
            raise InvalidInstanceError("capacity is not a normalized monotone set function")
        return self

    def transform(self, X):
        check_is_fitted(self, "capacity_")
        X = self._check_unit(check_array(X, dtype=float))
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        space = self.capacity_.space
        out = np.empty((X.shape[0], 1))
        for k, row in enumerate(X):
            inst = Instance(self.capacity_, MeasurableFunction(space, tuple(row)))
            out[k, 0] = seminormed_integral(self.semicopula_, inst).value
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array(["seminormed_integral"], dtype=object)

    @staticmethod
    def _check_unit(X):
        if X.size and (X.min() < -ATOL or X.max() > 1.0 + ATOL):
            raise DomainError("feature values must lie in [0, 1]")
        return np.clip(X, 0.0, 1.0)
