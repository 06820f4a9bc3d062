"""Logistic regression with two solvers.

"newton": damped Newton iterations on the L2-regularized mean log-loss,
used for the stacking meta-learner. "sag": stochastic average gradient,
the solver the TF.IDF feature-selection step calls for.

penalty_scale picks the regularization semantics:
  "sum":  J = mean(loss) + ||w||^2 / (2 C n)   (classic C semantics)
  "mean": J = mean(loss) + ||w||^2 / (2 C)     (sample-size invariant;
          duplicating the whole dataset leaves the optimum unchanged)
The intercept is never penalized.
"""

import numpy as np

SAG_MAX_PASSES = 1000


def _sigmoid(z):
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out if out.ndim else float(out)


def _log_loss(p, y):
    eps = 1e-12
    return -np.mean(y * np.log(p + eps) + (1 - y) * np.log(1 - p + eps))


class LogisticRegression:
    def __init__(self, C=1.0, tol=1e-4, max_iter=100, solver="newton",
                 penalty_scale="sum", seed=0):
        if solver not in ("newton", "sag"):
            raise ValueError(f"unknown solver {solver!r}")
        if penalty_scale not in ("sum", "mean"):
            raise ValueError(f"unknown penalty scale {penalty_scale!r}")
        self.C = C
        self.tol = tol
        self.max_iter = max_iter
        self.solver = solver
        self.penalty_scale = penalty_scale
        self.seed = seed
        self.coef_ = None
        self.intercept_ = 0.0

    def _lambda(self, n):
        if self.penalty_scale == "mean":
            return 1.0 / self.C
        return 1.0 / (self.C * n)

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        if self.solver == "newton":
            self._fit_newton(X, y)
        else:
            self._fit_sag(X, y)
        return self

    def _objective(self, X, y, w, b, lam):
        p = _sigmoid(X @ w + b)
        return _log_loss(p, y) + 0.5 * lam * float(w @ w)

    def _fit_newton(self, X, y):
        n, d = X.shape
        lam = self._lambda(n)
        w = np.zeros(d)
        b = 0.0
        for _ in range(self.max_iter):
            z = X @ w + b
            p = _sigmoid(z)
            r = (p - y) / n
            gw = X.T @ r + lam * w
            gb = r.sum()
            if max(np.max(np.abs(gw)), abs(gb)) < self.tol:
                break
            s = p * (1.0 - p) / n
            Xa = np.column_stack([X, np.ones(n)])
            H = Xa.T @ (Xa * s[:, None])
            H[:d, :d] += lam * np.eye(d)
            H[np.diag_indices_from(H)] += 1e-10
            step = np.linalg.solve(H, np.concatenate([gw, [gb]]))
            cur = self._objective(X, y, w, b, lam)
            scale = 1.0
            for _ in range(30):
                w_new = w - scale * step[:d]
                b_new = b - scale * step[d]
                if self._objective(X, y, w_new, b_new, lam) <= cur:
                    break
                scale *= 0.5
            w = w - scale * step[:d]
            b = b - scale * step[d]
        self.coef_ = w
        self.intercept_ = float(b)

    def _fit_sag(self, X, y):
        n, d = X.shape
        lam = self._lambda(n)
        row_sq = np.einsum("ij,ij->i", X, X)
        lipschitz = 0.25 * float(row_sq.max()) + lam
        step = 1.0 / lipschitz

        w = np.zeros(d)
        b = 0.0
        resid = np.zeros(n)
        seen = np.zeros(n, dtype=bool)
        grad_sum = np.zeros(d)
        resid_sum = 0.0
        n_seen = 0
        rng = np.random.default_rng(self.seed)

        for _ in range(min(SAG_MAX_PASSES, max(self.max_iter, 1) * 10)):
            for i in rng.permutation(n):
                x = X[i]
                r_new = _sigmoid(float(x @ w + b)) - y[i]
                if not seen[i]:
                    seen[i] = True
                    n_seen += 1
                    grad_sum += r_new * x
                    resid_sum += r_new
                else:
                    delta = r_new - resid[i]
                    grad_sum += delta * x
                    resid_sum += delta
                resid[i] = r_new
                w = w - step * (grad_sum / n_seen + lam * w)
                b = b - step * (resid_sum / n_seen)
            # true-gradient stop: strong convexity bounds the distance to
            # the optimum by the gradient norm, so this is order-independent
            r_full = _sigmoid(X @ w + b) - y
            gw = X.T @ r_full / n + lam * w
            if max(np.max(np.abs(gw)), abs(float(r_full.mean()))) < self.tol:
                break
        self.coef_ = w
        self.intercept_ = float(b)

    def decision_function(self, X):
        X = np.asarray(X, dtype=np.float64)
        return X @ self.coef_ + self.intercept_

    def predict_positive(self, X):
        return _sigmoid(self.decision_function(X))

    def predict_proba(self, X):
        p = self.predict_positive(X)
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_positive(X) >= 0.5).astype(int)
