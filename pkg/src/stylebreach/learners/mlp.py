"""Single-hidden-layer perceptron: 100 rectified-linear units, logistic
output, cross-entropy loss with L2 weight decay, adaptive-moment updates.

loss_and_grads is a pure function of a flat parameter vector so the
backward pass can be checked against finite differences.
"""

import numpy as np

ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPS = 1e-8
STOP_TOL = 1e-4
STOP_PATIENCE = 10


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def pack(w1, b1, w2, b2):
    return np.concatenate([w1.ravel(), b1, w2.ravel(), b2])


def unpack(theta, n_in, n_hidden):
    i = 0
    w1 = theta[i:i + n_in * n_hidden].reshape(n_in, n_hidden)
    i += n_in * n_hidden
    b1 = theta[i:i + n_hidden]
    i += n_hidden
    w2 = theta[i:i + n_hidden].reshape(n_hidden, 1)
    i += n_hidden
    b2 = theta[i:i + 1]
    return w1, b1, w2, b2


def loss_and_grads(theta, X, y, alpha, n_in, n_hidden):
    """Mean cross-entropy + (alpha / (2m)) * squared weight norms, with
    the full gradient in the same flat layout as theta.
    """
    w1, b1, w2, b2 = unpack(theta, n_in, n_hidden)
    m = X.shape[0]

    z1 = X @ w1 + b1
    h = np.maximum(z1, 0.0)
    z2 = (h @ w2).ravel() + b2[0]
    p = _sigmoid(z2)

    eps = 1e-12
    ce = -np.mean(y * np.log(p + eps) + (1 - y) * np.log(1 - p + eps))
    reg = (alpha / (2.0 * m)) * (np.sum(w1 * w1) + np.sum(w2 * w2))
    loss = ce + reg

    delta2 = (p - y) / m
    gw2 = h.T @ delta2[:, None] + (alpha / m) * w2
    gb2 = np.array([delta2.sum()])
    dh = delta2[:, None] @ w2.T
    dz1 = dh * (z1 > 0)
    gw1 = X.T @ dz1 + (alpha / m) * w1
    gb1 = dz1.sum(axis=0)

    return loss, pack(gw1, gb1, gw2, gb2)


class MLP:
    def __init__(self, n_hidden=100, alpha=1e-4, learning_rate=1e-3,
                 batch_size=200, max_iter=10000, seed=0):
        self.n_hidden = n_hidden
        self.alpha = alpha
        self.learning_rate = learning_rate
        self.batch_size = batch_size
        self.max_iter = max_iter
        self.seed = seed
        self.theta = None
        self.n_in = None

    def _init_theta(self, n_in, rng):
        lim1 = np.sqrt(6.0 / (n_in + self.n_hidden))
        lim2 = np.sqrt(6.0 / (self.n_hidden + 1))
        w1 = rng.uniform(-lim1, lim1, size=(n_in, self.n_hidden))
        b1 = np.zeros(self.n_hidden)
        w2 = rng.uniform(-lim2, lim2, size=(self.n_hidden, 1))
        b2 = np.zeros(1)
        return pack(w1, b1, w2, b2)

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        n, d = X.shape
        self.n_in = d
        rng = np.random.default_rng(self.seed)
        theta = self._init_theta(d, rng)

        mom = np.zeros_like(theta)
        vel = np.zeros_like(theta)
        t = 0
        best = np.inf
        stale = 0
        batch = min(self.batch_size, n)

        for _ in range(self.max_iter):
            order = rng.permutation(n)
            for start in range(0, n, batch):
                rows = order[start:start + batch]
                _, grad = loss_and_grads(
                    theta, X[rows], y[rows], self.alpha, d, self.n_hidden
                )
                t += 1
                mom = ADAM_BETA1 * mom + (1 - ADAM_BETA1) * grad
                vel = ADAM_BETA2 * vel + (1 - ADAM_BETA2) * grad * grad
                m_hat = mom / (1 - ADAM_BETA1 ** t)
                v_hat = vel / (1 - ADAM_BETA2 ** t)
                theta = theta - self.learning_rate * m_hat / (np.sqrt(v_hat) + ADAM_EPS)
            loss, _ = loss_and_grads(theta, X, y, self.alpha, d, self.n_hidden)
            if loss < best - STOP_TOL:
                best = loss
                stale = 0
            else:
                stale += 1
                if stale >= STOP_PATIENCE:
                    break
        self.theta = theta
        return self

    def predict_positive(self, X):
        X = np.asarray(X, dtype=np.float64)
        w1, b1, w2, b2 = unpack(self.theta, self.n_in, self.n_hidden)
        h = np.maximum(X @ w1 + b1, 0.0)
        return _sigmoid((h @ w2).ravel() + b2[0])

    def predict_proba(self, X):
        p = self.predict_positive(X)
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_positive(X) >= 0.5).astype(int)
