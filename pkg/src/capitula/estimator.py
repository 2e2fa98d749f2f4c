"""scikit-learn front end: rows of (p1, p2, q) in, invariants or verdicts out."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array

from .pipeline import analyze_triple
from .triple import PrimeTriple

FEATURES = ("r", "am", "ams", "QK1", "QK2", "QK3", "size1", "size2", "size3", "cl222", "main_ok")


def check_triples(X) -> np.ndarray:
    """Validate an (n, 3) integer array of prime triples."""
    X = check_array(X, dtype=np.int64, ensure_2d=True)
    if X.shape[1] != 3:
        raise ValueError(f"expected 3 columns (p1, p2, q), got {X.shape[1]}")
    for row in X:
        PrimeTriple(*map(int, row))
    return X


class CapitulationTransformer(TransformerMixin, BaseEstimator):
    """Stateless: ``fit`` only validates, ``transform`` returns one row of
    invariants per triple (columns in FEATURES), ``predict`` the main-theorem verdict.

    ``only_222`` restricts ``predict`` to the full-capitulation verdict of the
    (2,2,2) case, returning False for other triples.
    """

    def __init__(self, only_222: bool = False):
        self.only_222 = only_222

    def fit(self, X, y=None):
        X = check_triples(X)
        self.n_features_in_ = X.shape[1]
        self.feature_names_out_ = np.array(FEATURES, dtype=object)
        return self

    def _reports(self, X):
        return [analyze_triple(PrimeTriple(*map(int, row))) for row in check_triples(X)]

    def transform(self, X) -> np.ndarray:
        rows = []
        for r in self._reports(X):
            g, cap, fsu = r.genus, r.capitulation, r.fsu
            rows.append([g["r"], g["am"], g["ams"],
                         fsu["K1"]["hasse_Q"], fsu["K2"]["hasse_Q"], fsu["K3"]["hasse_Q"],
                         cap["sizes"]["1"], cap["sizes"]["2"], cap["sizes"]["3"],
                         int(r.type_label["cl222"]), int(r.main_ok)])
        return np.asarray(rows, dtype=np.int64).reshape(-1, len(FEATURES))

    def predict(self, X) -> np.ndarray:
        out = []
        for r in self._reports(X):
            if self.only_222:
                out.append(bool(r.verdicts["full_capitulation"]))
            else:
                out.append(r.main_ok)
        return np.asarray(out, dtype=bool)

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        return np.array(FEATURES, dtype=object)
