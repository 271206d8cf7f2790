"""Classifiers and selection: SMO-trained kernel SVM, one-vs-one multiclass,
stratified k-fold cross-validation, GA feature-subset selection, and ROC.

Everything is deterministic for a fixed seed: fold assignment, GA evolution,
and SMO itself (index-ordered heuristics, no random restarts).  Normalization
is always fitted inside the training portion only.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ModelFormatError, SchemaMismatchError, TrainingError
from .features import NormStats, apply_norm, fit_norm

_STEP_EPS = 1e-8


@dataclass(frozen=True)
class KernelSpec:
    name: str                      # "linear" or "rbf"
    gamma: Optional[float] = None  # rbf only; default 1/num_features

    def resolve_gamma(self, num_features: int) -> float:
        if self.gamma is not None:
            return self.gamma
        return 1.0 / max(num_features, 1)


def _gram(kernel: KernelSpec, X1: np.ndarray, X2: np.ndarray) -> np.ndarray:
    if kernel.name == "linear":
        return X1 @ X2.T
    if kernel.name == "rbf":
        gamma = kernel.resolve_gamma(X1.shape[1])
        sq = (
            np.sum(X1 ** 2, axis=1)[:, None]
            + np.sum(X2 ** 2, axis=1)[None, :]
            - 2.0 * (X1 @ X2.T)
        )
        return np.exp(-gamma * np.maximum(sq, 0.0))
    raise TrainingError("unknown kernel %r" % (kernel.name,))


@dataclass
class FitReport:
    alphas: np.ndarray
    epochs: int
    objective_trace: Optional[list] = None


@dataclass
class BinarySvm:
    kernel: KernelSpec
    C: float
    support_vectors: np.ndarray
    coef: np.ndarray               # alpha_i * y_i per support vector
    bias: float
    fit_report: Optional[FitReport] = field(default=None, repr=False, compare=False)

    def decision_function(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if X.shape[1] != self.support_vectors.shape[1]:
            raise SchemaMismatchError(
                "input has %d features, model expects %d"
                % (X.shape[1], self.support_vectors.shape[1])
            )
        if len(self.support_vectors) == 0:
            return np.full(X.shape[0], self.bias)
        K = _gram(self.kernel, X, self.support_vectors)
        return K @ self.coef + self.bias


def svm_train(X, y, kernel: str | KernelSpec = "linear", C: float = 1.0,
              gamma: Optional[float] = None, tol: float = 1e-3,
              max_epochs: int = 1000, record_objective: bool = False) -> BinarySvm:
    """Soft-margin SVM via sequential minimal optimization.

    y must contain both labels of {-1, +1}.  Training stops when every alpha
    satisfies the KKT conditions within `tol`; the pair-step heuristics are
    index-ordered so refits are bit-reproducible.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2 or len(X) != len(y):
        raise TrainingError("X and y shapes disagree")
    if np.any(~np.isfinite(X)) or np.any(~np.isfinite(y)):
        raise TrainingError("training data contains NaN or infinity")
    if not (np.any(y == 1.0) and np.any(y == -1.0)) or np.any(np.abs(y) != 1.0):
        raise TrainingError("labels must include both -1 and +1")
    if C <= 0:
        raise TrainingError("C must be positive")

    spec = kernel if isinstance(kernel, KernelSpec) else KernelSpec(kernel, gamma)
    if spec.name == "rbf" and spec.gamma is None:
        spec = KernelSpec("rbf", 1.0 / X.shape[1])

    n = len(y)
    K = _gram(spec, X, X)
    alphas = np.zeros(n)
    errors = -y.copy()           # E_i = f(x_i) - y_i with f == 0 initially
    bias = 0.0
    objective: Optional[list] = [] if record_objective else None

    def current_objective() -> float:
        yy = alphas * y
        return float(alphas.sum() - 0.5 * yy @ K @ yy)

    def take_step(i1: int, i2: int) -> bool:
        nonlocal bias
        if i1 == i2:
            return False
        a1, a2 = alphas[i1], alphas[i2]
        y1, y2 = y[i1], y[i2]
        e1, e2 = errors[i1], errors[i2]
        s = y1 * y2
        if s > 0:
            lo, hi = max(0.0, a1 + a2 - C), min(C, a1 + a2)
        else:
            lo, hi = max(0.0, a2 - a1), min(C, C + a2 - a1)
        if lo >= hi:
            return False
        k11, k12, k22 = K[i1, i1], K[i1, i2], K[i2, i2]
        eta = k11 + k22 - 2.0 * k12
        if eta > 0:
            a2_new = a2 + y2 * (e1 - e2) / eta
            a2_new = min(max(a2_new, lo), hi)
        else:
            # Degenerate curvature: evaluate the dual at both clip ends.
            f1 = y1 * e1 - a1 * k11 - s * a2 * k12
            f2 = y2 * e2 - a2 * k22 - s * a1 * k12
            l1 = a1 + s * (a2 - lo)
            h1 = a1 + s * (a2 - hi)
            obj_lo = (l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11
                      + 0.5 * lo * lo * k22 + s * lo * l1 * k12)
            obj_hi = (h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11
                      + 0.5 * hi * hi * k22 + s * hi * h1 * k12)
            if obj_lo < obj_hi - _STEP_EPS:
                a2_new = lo
            elif obj_lo > obj_hi + _STEP_EPS:
                a2_new = hi
            else:
                return False
        if abs(a2_new - a2) < _STEP_EPS * (a2_new + a2 + _STEP_EPS):
            return False
        a1_new = a1 + s * (a2 - a2_new)

        d1 = y1 * (a1_new - a1)
        d2 = y2 * (a2_new - a2)
        b1 = bias - e1 - d1 * k11 - d2 * k12
        b2 = bias - e2 - d1 * k12 - d2 * k22
        if 0.0 < a1_new < C:
            new_bias = b1
        elif 0.0 < a2_new < C:
            new_bias = b2
        else:
            new_bias = (b1 + b2) / 2.0
        errors[:] += d1 * K[i1] + d2 * K[i2] + (new_bias - bias)
        alphas[i1], alphas[i2] = a1_new, a2_new
        bias = new_bias
        if objective is not None:
            objective.append(current_objective())
        return True

    def examine(i2: int) -> bool:
        y2, a2, e2 = y[i2], alphas[i2], errors[i2]
        r2 = e2 * y2
        if not ((r2 < -tol and a2 < C) or (r2 > tol and a2 > 0)):
            return False
        non_bound = np.flatnonzero((alphas > 0) & (alphas < C))
        if len(non_bound) > 1:
            gaps = np.abs(errors[non_bound] - e2)
            if take_step(int(non_bound[np.argmax(gaps)]), i2):
                return True
        for i1 in non_bound:
            if take_step(int(i1), i2):
                return True
        for i1 in range(n):
            if take_step(i1, i2):
                return True
        return False

    epochs = 0
    examine_all = True
    changed = 0
    while (changed > 0 or examine_all) and epochs < max_epochs:
        changed = 0
        if examine_all:
            targets = range(n)
        else:
            targets = np.flatnonzero((alphas > 0) & (alphas < C))
        for i2 in targets:
            changed += examine(int(i2))
        epochs += 1
        if examine_all:
            examine_all = False
        elif changed == 0:
            examine_all = True

    support = alphas > 1e-12
    model = BinarySvm(
        kernel=spec,
        C=C,
        support_vectors=X[support].copy(),
        coef=(alphas * y)[support].copy(),
        bias=bias,
        fit_report=FitReport(alphas=alphas, epochs=epochs, objective_trace=objective),
    )
    return model


def svm_predict(model: BinarySvm, x) -> tuple[int, float]:
    """Sign of the decision function plus the raw decision value."""
    decision = float(model.decision_function(np.atleast_2d(x))[0])
    return (1 if decision >= 0 else -1), decision


def kkt_residuals(model: BinarySvm, X, y) -> np.ndarray:
    """Per-sample KKT violation of a fitted model on its own training set."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    alphas = model.fit_report.alphas
    margins = y * model.decision_function(X)
    residuals = np.zeros(len(y))
    at_zero = alphas <= 1e-12
    at_c = alphas >= model.C - 1e-12
    interior = ~(at_zero | at_c)
    residuals[at_zero] = np.maximum(0.0, 1.0 - margins[at_zero])
    residuals[at_c] = np.maximum(0.0, margins[at_c] - 1.0)
    residuals[interior] = np.abs(margins[interior] - 1.0)
    return residuals


# ---------------------------------------------------------------------------
# one-vs-one multiclass


@dataclass
class OvoModel:
    classes: tuple
    # machines[(i, j)] with i < j; decision >= 0 votes classes[j].
    machines: dict
    kernel: KernelSpec
    C: float


def ovo_train(X, labels, kernel: str | KernelSpec = "linear", C: float = 1.0,
              gamma: Optional[float] = None, tol: float = 1e-3) -> OvoModel:
    """K(K-1)/2 pairwise SVMs over the sorted class set."""
    X = np.asarray(X, dtype=np.float64)
    labels = list(labels)
    classes = tuple(sorted(set(labels)))
    if len(classes) < 2:
        raise TrainingError("need >= 2 classes, got %r" % (classes,))
    spec = kernel if isinstance(kernel, KernelSpec) else KernelSpec(kernel, gamma)
    indices = {c: np.array([k for k, lab in enumerate(labels) if lab == c]) for c in classes}
    machines = {}
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            rows = np.concatenate([indices[classes[i]], indices[classes[j]]])
            rows.sort()
            y = np.where(np.array([labels[r] for r in rows], dtype=object) == classes[j],
                         1.0, -1.0).astype(np.float64)
            machines[(i, j)] = svm_train(X[rows], y, spec, C=C, tol=tol)
    return OvoModel(classes=classes, machines=machines, kernel=spec, C=C)


def ovo_decisions(model: OvoModel, x) -> dict:
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    return {pair: float(m.decision_function(x)[0]) for pair, m in model.machines.items()}


def ovo_predict(model: OvoModel, x):
    """Majority vote; ties broken by summed decision-value magnitude, then
    lowest class index."""
    votes = np.zeros(len(model.classes))
    magnitude = np.zeros(len(model.classes))
    for (i, j), decision in ovo_decisions(model, x).items():
        winner = j if decision >= 0 else i
        votes[winner] += 1
        magnitude[winner] += abs(decision)
    best = np.flatnonzero(votes == votes.max())
    if len(best) > 1:
        strongest = magnitude[best].max()
        best = best[magnitude[best] == strongest]
    return model.classes[int(best[0])]


# ---------------------------------------------------------------------------
# stratified k-fold cross-validation


@dataclass
class CvReport:
    accuracy: float
    sensitivity: Optional[float]
    specificity: Optional[float]
    per_fold: list
    confusion: np.ndarray          # rows = true class, cols = predicted
    classes: tuple
    k: int
    seed: int


def stratified_folds(labels, k: int, seed: int) -> list:
    """Disjoint covering folds with per-class round-robin assignment."""
    labels = list(labels)
    classes = sorted(set(labels))
    rng = np.random.default_rng(seed)
    folds = [[] for _ in range(k)]
    for c in classes:
        rows = np.array([i for i, lab in enumerate(labels) if lab == c])
        rows = rows[rng.permutation(len(rows))]
        for pos, row in enumerate(rows):
            folds[pos % k].append(int(row))
    return [sorted(fold) for fold in folds]


def kfold_cv(X, labels, k: int = 10, seed: int = 0,
             kernel: str | KernelSpec = "linear", C: float = 1.0,
             gamma: Optional[float] = None, tol: float = 1e-3) -> CvReport:
    """Cross-validated accuracy with normalization fitted per training fold.

    For binary tasks sensitivity is the recall of the lexicographically last
    class (the stego class under cover/stego labels) and specificity the
    recall of the first.
    """
    X = np.asarray(X, dtype=np.float64)
    labels = list(labels)
    if k < 2:
        raise TrainingError("k must be >= 2, got %d" % k)
    classes = tuple(sorted(set(labels)))
    if len(classes) < 2:
        raise TrainingError("need >= 2 classes")
    smallest = min(labels.count(c) for c in classes)
    if smallest < k:
        warnings.warn(
            "reducing folds from %d to %d (smallest class)" % (k, smallest),
            stacklevel=2,
        )
        k = smallest
    if k < 2:
        raise TrainingError("smallest class has fewer than 2 samples")

    folds = stratified_folds(labels, k, seed)
    index_of = {c: i for i, c in enumerate(classes)}
    confusion = np.zeros((len(classes), len(classes)), dtype=np.int64)
    per_fold = []
    for fold in folds:
        test = np.array(fold)
        train = np.array(sorted(set(range(len(labels))) - set(fold)))
        stats = fit_norm(X[train])
        model = ovo_train(apply_norm(stats, X[train]),
                          [labels[i] for i in train], kernel, C=C, gamma=gamma, tol=tol)
        correct = 0
        for row in test:
            predicted = ovo_predict(model, apply_norm(stats, X[row]))
            confusion[index_of[labels[row]], index_of[predicted]] += 1
            correct += predicted == labels[row]
        per_fold.append(correct / len(test))

    accuracy = float(np.trace(confusion) / confusion.sum())
    sensitivity = specificity = None
    if len(classes) == 2:
        pos, neg = 1, 0
        sensitivity = float(confusion[pos, pos] / max(confusion[pos].sum(), 1))
        specificity = float(confusion[neg, neg] / max(confusion[neg].sum(), 1))
    return CvReport(
        accuracy=accuracy,
        sensitivity=sensitivity,
        specificity=specificity,
        per_fold=per_fold,
        confusion=confusion,
        classes=classes,
        k=k,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# GA feature-subset selection


@dataclass
class GaConfig:
    target: int                      # subset size
    population: int = 200
    stagnation_limit: int = 5
    mutation_rate: float = 0.01
    seed: int = 0
    elitism: int = 1
    cv_folds: int = 3                # folds behind the accuracy fitness
    kernel: str = "linear"
    C: float = 1.0
    max_generations: int = 1000
    crossover: str = "two_point"

    def validate(self, num_features: int) -> None:
        if self.population < 2 or self.population % 2:
            raise TrainingError("population must be an even number >= 2")
        if not 1 <= self.target <= num_features:
            raise TrainingError(
                "target %d outside 1..%d features" % (self.target, num_features)
            )
        if self.stagnation_limit < 1:
            raise TrainingError("stagnation_limit must be >= 1")
        if self.crossover != "two_point":
            raise TrainingError("only two_point crossover is supported")


@dataclass
class GaResult:
    selected_indices: tuple
    selected_names: tuple
    trace: list                      # best-so-far fitness per generation
    generations: int
    seed: int


def _repair(genes, num_features: int, rng) -> tuple:
    seen = []
    for g in genes:
        if g not in seen:
            seen.append(int(g))
    missing = len(genes) - len(seen)
    if missing:
        unused = sorted(set(range(num_features)) - set(seen))
        picks = rng.choice(len(unused), size=missing, replace=False)
        seen.extend(unused[int(p)] for p in picks)
    return tuple(sorted(seen))


def _two_point(a, b, rng) -> tuple:
    n = len(a)
    p, q = sorted(int(v) for v in rng.integers(0, n + 1, size=2))
    return a[:p] + b[p:q] + a[q:], b[:p] + a[p:q] + b[q:]


def _mutate(genes, num_features: int, rate: float, rng) -> tuple:
    out = list(genes)
    for pos in range(len(out)):
        if rng.random() < rate:
            unused = sorted(set(range(num_features)) - set(out))
            if unused:
                out[pos] = unused[int(rng.integers(0, len(unused)))]
    return tuple(sorted(out))


def ga_select(X, labels, config: GaConfig, feature_names: Sequence[str] = ()) -> GaResult:
    """Fixed-size subset selection with CV accuracy as fitness.

    Two-point crossover on sorted index lists (duplicates repaired from the
    unused pool), per-gene mutation, single-elite survival, and termination
    after `stagnation_limit` consecutive generations without improving the
    best fitness ever seen.  Bit-reproducible for a fixed seed.
    """
    X = np.asarray(X, dtype=np.float64)
    num_features = X.shape[1]
    config.validate(num_features)
    rng = np.random.default_rng(config.seed)
    cache: dict = {}

    def fitness(subset: tuple) -> float:
        if subset not in cache:
            report = kfold_cv(X[:, list(subset)], labels, k=config.cv_folds,
                              seed=config.seed, kernel=config.kernel, C=config.C)
            cache[subset] = report.accuracy
        return cache[subset]

    def sample_subset() -> tuple:
        picks = rng.choice(num_features, size=config.target, replace=False)
        return tuple(sorted(int(p) for p in picks))

    population = [sample_subset() for _ in range(config.population)]
    scores = [fitness(ind) for ind in population]

    def best_of(pop, sc) -> tuple:
        order = max(range(len(pop)), key=lambda i: (sc[i], pop[i]))
        return pop[order], sc[order]

    best_subset, best_score = best_of(population, scores)
    trace = [best_score]
    stagnant = 0
    generations = 0

    def tournament() -> tuple:
        i, j = rng.integers(0, config.population, size=2)
        i, j = int(i), int(j)
        return population[i] if (scores[i], -i) >= (scores[j], -j) else population[j]

    while stagnant < config.stagnation_limit and generations < config.max_generations:
        next_pop = [best_subset] if config.elitism else []
        while len(next_pop) < config.population:
            c1, c2 = _two_point(tournament(), tournament(), rng)
            c1 = _mutate(_repair(c1, num_features, rng), num_features,
                         config.mutation_rate, rng)
            c2 = _mutate(_repair(c2, num_features, rng), num_features,
                         config.mutation_rate, rng)
            next_pop.append(c1)
            if len(next_pop) < config.population:
                next_pop.append(c2)
        population = next_pop
        scores = [fitness(ind) for ind in population]
        generations += 1
        gen_best, gen_score = best_of(population, scores)
        if gen_score > best_score:
            best_subset, best_score = gen_best, gen_score
            stagnant = 0
        else:
            stagnant += 1
        trace.append(best_score)

    names = tuple(feature_names[i] for i in best_subset) if feature_names else ()
    return GaResult(
        selected_indices=best_subset,
        selected_names=names,
        trace=trace,
        generations=generations,
        seed=config.seed,
    )


# ---------------------------------------------------------------------------
# ROC


def roc_points(scores, labels) -> list:
    """Monotone ROC staircase from (0,0) to (1,1); ties collapse to diagonals."""
    scores = np.asarray(scores, dtype=np.float64)
    labels = list(labels)
    classes = sorted(set(labels))
    if len(classes) != 2:
        raise TrainingError("ROC needs exactly 2 classes, got %d" % len(classes))
    positive = classes[-1]
    is_pos = np.array([lab == positive for lab in labels])
    n_pos = int(is_pos.sum())
    n_neg = len(labels) - n_pos
    order = np.argsort(-scores, kind="stable")
    points = [(0.0, 0.0)]
    tp = fp = 0
    i = 0
    while i < len(order):
        j = i
        while j < len(order) and scores[order[j]] == scores[order[i]]:
            tp += bool(is_pos[order[j]])
            fp += not is_pos[order[j]]
            j += 1
        points.append((fp / n_neg, tp / n_pos))
        i = j
    return points


def roc_auc(points) -> float:
    fpr = np.array([p[0] for p in points])
    tpr = np.array([p[1] for p in points])
    return float(np.trapezoid(tpr, fpr))


# ---------------------------------------------------------------------------
# trained-model bundle and serialization

MODEL_FORMAT = "mp3sleuth-model/1"


@dataclass
class TrainedModel:
    schema_id: str
    feature_names: tuple
    kernel: KernelSpec
    C: float
    norm: NormStats
    ovo: OvoModel

    @property
    def classes(self) -> tuple:
        return self.ovo.classes


def train_model(X, labels, feature_names, schema_id: str,
                kernel: str | KernelSpec = "linear", C: float = 1.0,
                gamma: Optional[float] = None, tol: float = 1e-3) -> TrainedModel:
    """Fit normalization on the full training set, then a one-vs-one SVM."""
    X = np.asarray(X, dtype=np.float64)
    spec = kernel if isinstance(kernel, KernelSpec) else KernelSpec(kernel, gamma)
    stats = fit_norm(X, names=feature_names, schema_id=schema_id)
    ovo = ovo_train(apply_norm(stats, X), labels, spec, C=C, tol=tol)
    return TrainedModel(
        schema_id=schema_id,
        feature_names=tuple(feature_names),
        kernel=spec,
        C=C,
        norm=stats,
        ovo=ovo,
    )


def predict_model(model: TrainedModel, x_raw) -> tuple:
    """(label, decision value) for one raw (unnormalized) feature vector.

    Binary models report the signed pairwise decision; multiclass models
    report the winner's summed decision magnitude.
    """
    x = apply_norm(model.norm, np.asarray(x_raw, dtype=np.float64))
    if len(model.classes) == 2:
        machine = model.ovo.machines[(0, 1)]
        decision = float(machine.decision_function(np.atleast_2d(x))[0])
        label = model.classes[1] if decision >= 0 else model.classes[0]
        return label, decision
    label = ovo_predict(model.ovo, x)
    winner = model.classes.index(label)
    magnitude = 0.0
    for (i, j), decision in ovo_decisions(model.ovo, x).items():
        if (j if decision >= 0 else i) == winner:
            magnitude += abs(decision)
    return label, magnitude


def save_model(model: TrainedModel, fh) -> None:
    machines = []
    for (i, j), m in sorted(model.ovo.machines.items()):
        machines.append({
            "neg": i,
            "pos": j,
            "support_vectors": m.support_vectors.tolist(),
            "coef": m.coef.tolist(),
            "bias": m.bias,
        })
    doc = {
        "format": MODEL_FORMAT,
        "schema_id": model.schema_id,
        "feature_names": list(model.feature_names),
        "num_features": len(model.feature_names),
        "kernel": {"name": model.kernel.name, "gamma": model.kernel.gamma},
        "C": model.C,
        "classes": [str(c) for c in model.classes],
        "norm": {"mean": model.norm.mean.tolist(), "std": model.norm.std.tolist()},
        "machines": machines,
    }
    json.dump(doc, fh, indent=1, sort_keys=True)
    fh.write("\n")


def load_model(fh) -> TrainedModel:
    try:
        doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ModelFormatError("model file is not valid JSON: %s" % exc) from exc
    if not isinstance(doc, dict) or doc.get("format") != MODEL_FORMAT:
        raise ModelFormatError(
            "unknown model format %r (expected %r)" % (doc.get("format"), MODEL_FORMAT)
        )
    kernel = KernelSpec(doc["kernel"]["name"], doc["kernel"]["gamma"])
    classes = tuple(doc["classes"])
    width = doc.get("num_features", len(doc["feature_names"]))
    machines = {}
    for entry in doc["machines"]:
        support = np.array(entry["support_vectors"], dtype=np.float64)
        machines[(entry["neg"], entry["pos"])] = BinarySvm(
            kernel=kernel,
            C=doc["C"],
            support_vectors=support.reshape(len(entry["coef"]), width),
            coef=np.array(entry["coef"], dtype=np.float64),
            bias=entry["bias"],
        )
    names = tuple(doc["feature_names"])
    norm = NormStats(
        schema_id=doc["schema_id"],
        names=names,
        mean=np.array(doc["norm"]["mean"], dtype=np.float64),
        std=np.array(doc["norm"]["std"], dtype=np.float64),
    )
    return TrainedModel(
        schema_id=doc["schema_id"],
        feature_names=names,
        kernel=kernel,
        C=doc["C"],
        norm=norm,
        ovo=OvoModel(classes=classes, machines=machines, kernel=kernel, C=doc["C"]),
    )
