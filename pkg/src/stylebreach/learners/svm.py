"""Kernel margin classifier: radial-basis kernel, sequential minimal
optimization, per-class penalty balancing, and logistic calibration of
the decision values for probability output.
"""

import numpy as np

PLATT_ITERS = 100
PLATT_TOL = 1e-10


def rbf_kernel(A, B, gamma):
    a2 = np.einsum("ij,ij->i", A, A)
    b2 = np.einsum("ij,ij->i", B, B)
    d2 = a2[:, None] + b2[None, :] - 2.0 * (A @ B.T)
    np.maximum(d2, 0.0, out=d2)
    return np.exp(-gamma * d2)


def platt_fit(decision, y):
    """Fit P(y=1|f) = sigmoid(-(A f + B)) on decision values with
    smoothed targets, by damped Newton on the cross-entropy.
    """
    f = np.asarray(decision, dtype=np.float64)
    y = np.asarray(y)
    n_pos = int(np.sum(y == 1))
    n_neg = len(y) - n_pos
    hi = (n_pos + 1.0) / (n_pos + 2.0)
    lo = 1.0 / (n_neg + 2.0)
    t = np.where(y == 1, hi, lo)

    A = 0.0
    B = np.log((n_neg + 1.0) / (n_pos + 1.0))

    def prob(a, b):
        z = a * f + b
        out = np.empty_like(z)
        neg = z < 0
        out[neg] = 1.0 / (1.0 + np.exp(z[neg]))
        ez = np.exp(-z[~neg])
        out[~neg] = ez / (1.0 + ez)
        return out

    def loss(a, b):
        p = prob(a, b)
        eps = 1e-12
        return -np.sum(t * np.log(p + eps) + (1 - t) * np.log(1 - p + eps))

    cur = loss(A, B)
    for _ in range(PLATT_ITERS):
        p = prob(A, B)
        d = t - p
        gA = np.sum(d * f)
        gB = np.sum(d)
        s = p * (1 - p)
        hAA = np.sum(s * f * f) + 1e-12
        hAB = np.sum(s * f)
        hBB = np.sum(s) + 1e-12
        det = hAA * hBB - hAB * hAB
        if abs(det) < 1e-18:
            break
        dA = (hBB * gA - hAB * gB) / det
        dB = (hAA * gB - hAB * gA) / det
        scale = 1.0
        new = None
        for _ in range(20):
            candidate = loss(A - scale * dA, B - scale * dB)
            if candidate <= cur:
                new = candidate
                break
            scale *= 0.5
        if new is None:
            break
        A -= scale * dA
        B -= scale * dB
        if cur - new < PLATT_TOL:
            cur = new
            break
        cur = new
    return A, B


class KernelMarginClassifier:
    def __init__(self, C=1.0, tol=1e-3, gamma="scale", class_weight="balanced",
                 max_passes=200, seed=0):
        self.C = C
        self.tol = tol
        self.gamma = gamma
        self.class_weight = class_weight
        self.max_passes = max_passes
        self.seed = seed

    def _gamma_value(self, X):
        if self.gamma == "scale":
            v = X.var()
            return 1.0 / (X.shape[1] * v) if v > 0 else 1.0
        return float(self.gamma)

    def _per_sample_C(self, y01):
        n = len(y01)
        if self.class_weight == "balanced":
            n_pos = max(1, int(y01.sum()))
            n_neg = max(1, n - int(y01.sum()))
            w_pos = n / (2.0 * n_pos)
            w_neg = n / (2.0 * n_neg)
            return np.where(y01 == 1, self.C * w_pos, self.C * w_neg)
        return np.full(n, self.C)

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y01 = np.asarray(y, dtype=np.int64)
        ys = np.where(y01 == 1, 1.0, -1.0)
        n = X.shape[0]
        self.X_train = X
        self.y_signed = ys
        self.gamma_ = self._gamma_value(X)
        Cs = self._per_sample_C(y01)
        K = rbf_kernel(X, X, self.gamma_)

        alpha = np.zeros(n)
        b = 0.0
        rng = np.random.default_rng(self.seed)

        def f_of(i):
            return float((alpha * ys) @ K[:, i]) + b

        passes = 0
        while passes < self.max_passes:
            changed = 0
            for i in range(n):
                Ei = f_of(i) - ys[i]
                if not (
                    (ys[i] * Ei < -self.tol and alpha[i] < Cs[i])
                    or (ys[i] * Ei > self.tol and alpha[i] > 0)
                ):
                    continue
                j = int(rng.integers(0, n - 1))
                if j >= i:
                    j += 1
                Ej = f_of(j) - ys[j]
                ai_old, aj_old = alpha[i], alpha[j]
                if ys[i] != ys[j]:
                    L = max(0.0, aj_old - ai_old)
                    H = min(Cs[j], Cs[i] + aj_old - ai_old)
                else:
                    L = max(0.0, ai_old + aj_old - Cs[i])
                    H = min(Cs[j], ai_old + aj_old)
                if L >= H:
                    continue
                eta = K[i, i] + K[j, j] - 2.0 * K[i, j]
                if eta <= 0:
                    continue
                aj = aj_old + ys[j] * (Ei - Ej) / eta
                aj = min(max(aj, L), H)
                if abs(aj - aj_old) < 1e-12:
                    continue
                ai = ai_old + ys[i] * ys[j] * (aj_old - aj)
                alpha[i], alpha[j] = ai, aj
                b1 = b - Ei - ys[i] * (ai - ai_old) * K[i, i] \
                    - ys[j] * (aj - aj_old) * K[i, j]
                b2 = b - Ej - ys[i] * (ai - ai_old) * K[i, j] \
                    - ys[j] * (aj - aj_old) * K[j, j]
                if 0 < ai < Cs[i]:
                    b = b1
                elif 0 < aj < Cs[j]:
                    b = b2
                else:
                    b = (b1 + b2) / 2.0
                changed += 1
            if changed == 0:
                break
            passes += 1

        self.alpha = alpha
        self.b = b
        self.per_sample_C = Cs
        decision = (alpha * ys) @ K + b
        self.platt_A, self.platt_B = platt_fit(decision, y01)
        return self

    def decision_function(self, X):
        X = np.asarray(X, dtype=np.float64)
        K = rbf_kernel(self.X_train, X, self.gamma_)
        return (self.alpha * self.y_signed) @ K + self.b

    def predict_positive(self, X):
        z = self.platt_A * self.decision_function(X) + self.platt_B
        out = np.empty_like(z)
        neg = z < 0
        out[neg] = 1.0 / (1.0 + np.exp(z[neg]))
        ez = np.exp(-z[~neg])
        out[~neg] = ez / (1.0 + ez)
        return out

    def predict_proba(self, X):
        p = self.predict_positive(X)
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_positive(X) >= 0.5).astype(int)
