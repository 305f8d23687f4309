"""
Neural network services script.
"""
import logging
import math
from decimal import Decimal
from pathlib import Path
from typing import Optional, Union
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from pydantic import ValidationError
from core.exceptions import DataError, DegenerateInputError, \
    DivergenceError, DomainError, InsufficientDataError
from models import mlp
from schemas.ann import ArchitectureReport, LearningCurve, MinMaxScaler, \
    MlpModel, SweepReport, TrainConfig
from services.metrics import MetricsService

logger: logging.Logger = logging.getLogger(__name__)

INIT_BOUND: float = 0.1
MIN_TRAIN_PAIRS: int = 10
ArrayLike = Union[float, list[float], np.ndarray]


class AnnService:
    """
    Min-max scaling, windowing, training and prediction for the
     volatility perceptron.
    """

    @staticmethod
    def scaler_fit(values) -> MinMaxScaler:
        """
        Fit the scaler on training values
        :param values: training observations
        :type values: array_like
        :return: scaler with the observed min and max
        :rtype: MinMaxScaler
        """
        data: np.ndarray = np.asarray(values, dtype=np.float64)
        if data.size < 2:
            raise InsufficientDataError("scaler needs at least 2 values")
        if data.max() == data.min():
            raise DegenerateInputError(
                "cannot scale values that are all equal")
        return MinMaxScaler(min_val=float(data.min()),
                            max_val=float(data.max()))

    @staticmethod
    def scaler_apply(scaler: MinMaxScaler, values: ArrayLike) -> np.ndarray:
        """
        (x - min) / (max - min), without clipping
        :param scaler: fitted scaler
        :type scaler: MinMaxScaler
        :param values: original units
        :type values: ArrayLike
        :return: scaled values
        :rtype: np.ndarray
        """
        return (np.asarray(values, dtype=np.float64) - scaler.min_val) / \
            scaler.span

    @staticmethod
    def scaler_invert(scaler: MinMaxScaler, values: ArrayLike) -> np.ndarray:
        """
        Map scaled values back to original units
        :param scaler: fitted scaler
        :type scaler: MinMaxScaler
        :param values: scaled values
        :type values: ArrayLike
        :return: min + y (max - min)
        :rtype: np.ndarray
        """
        return scaler.min_val + np.asarray(values, dtype=np.float64) * \
            scaler.span

    @staticmethod
    def make_windows(proxy, lookback: int = 5
                     ) -> tuple[np.ndarray, np.ndarray]:
        """
        Lookback windows and their next values
        :param proxy: variance sequence
        :type proxy: array_like
        :param lookback: window length
        :type lookback: int
        :return: inputs[k] = proxy[k:k + lookback] and
         targets[k] = proxy[k + lookback]
        :rtype: tuple[np.ndarray, np.ndarray]
        """
        data: np.ndarray = np.asarray(proxy, dtype=np.float64)
        if data.size <= lookback:
            raise InsufficientDataError(
                f"{data.size} values leave no window of length {lookback}")
        inputs: np.ndarray = sliding_window_view(data[:-1], lookback)
        return np.ascontiguousarray(inputs), data[lookback:].copy()

    @staticmethod
    def initialize(layer_sizes: list[int], scaler: MinMaxScaler,
                   rng_seed: int = 0) -> MlpModel:
        """
        Weights and biases drawn uniformly from [-0.1, 0.1]
        :param layer_sizes: input, hidden and output sizes
        :type layer_sizes: list[int]
        :param scaler: input scaler carried by the model
        :type scaler: MinMaxScaler
        :param rng_seed: seed of the PCG64 generator
        :type rng_seed: int
        :return: untrained model
        :rtype: MlpModel
        """
        rng: np.random.Generator = np.random.Generator(
            np.random.PCG64(rng_seed))
        weights, biases = AnnService._draw(layer_sizes, rng)
        return AnnService._to_model(layer_sizes, weights, biases, scaler,
                                    rng_seed)

    @staticmethod
    def _draw(layer_sizes: list[int], rng: np.random.Generator
              ) -> tuple[mlp.Layers, mlp.Layers]:
        weights: mlp.Layers = []
        biases: mlp.Layers = []
        for n_in, n_out in zip(layer_sizes, layer_sizes[1:]):
            weights.append(rng.uniform(-INIT_BOUND, INIT_BOUND,
                                       (n_out, n_in)))
            biases.append(rng.uniform(-INIT_BOUND, INIT_BOUND, n_out))
        return weights, biases

    @staticmethod
    def _to_model(layer_sizes: list[int], weights: mlp.Layers,
                  biases: mlp.Layers, scaler: MinMaxScaler,
                  rng_seed: int) -> MlpModel:
        return MlpModel(layer_sizes=list(layer_sizes),
                        weights=[w.tolist() for w in weights],
                        biases=[b.tolist() for b in biases], scaler=scaler,
                        rng_seed=rng_seed)

    @staticmethod
    def _check_input(model: MlpModel, values) -> np.ndarray:
        data: np.ndarray = np.asarray(values, dtype=np.float64).ravel()
        if data.size != model.layer_sizes[0]:
            raise DomainError(f"expected {model.layer_sizes[0]} inputs, got"
                              f" {data.size}")
        if not np.all(np.isfinite(data)):
            raise DomainError("network inputs must be finite")
        return data

    @staticmethod
    def forward(model: MlpModel, inputs) -> float:
        """
        Network output for one scaled input vector
        :param model: network
        :type model: MlpModel
        :param inputs: scaled lookback vector
        :type inputs: array_like
        :return: prediction in (0, 1), scaled units
        :rtype: float
        """
        data: np.ndarray = AnnService._check_input(model, inputs)
        weights, biases = model.arrays()
        output: np.ndarray = mlp.forward_pass(weights, biases,
                                              data[None, :])[-1]
        return float(output[0, 0])

    @staticmethod
    def backprop_gradients(model: MlpModel, inputs, target: float
                           ) -> tuple[mlp.Layers, mlp.Layers]:
        """
        Analytic gradient of (target - forward(inputs))^2
        :param model: network
        :type model: MlpModel
        :param inputs: scaled lookback vector
        :type inputs: array_like
        :param target: scaled target
        :type target: float
        :return: gradients shaped like the weights and the biases
        :rtype: tuple[list[np.ndarray], list[np.ndarray]]
        """
        data: np.ndarray = AnnService._check_input(model, inputs)
        weights, biases = model.arrays()
        activations: mlp.Layers = mlp.forward_pass(weights, biases,
                                                   data[None, :])
        return mlp.backward_pass(weights, activations,
                                 np.array([[float(target)]]))

    @staticmethod
    def train(inputs: np.ndarray, targets: np.ndarray, hidden_size: int,
              config: TrainConfig, scaler: MinMaxScaler
              ) -> tuple[MlpModel, LearningCurve]:
        """
        Mini-batch gradient descent on scaled windowed pairs.
        An epoch that raises the training loss is undone and the learning
         rate halved, so the recorded losses never increase.
        :param inputs: scaled windows, one row per pair
        :type inputs: np.ndarray
        :param targets: scaled next values
        :type targets: np.ndarray
        :param hidden_size: hidden neurons H
        :type hidden_size: int
        :param config: training settings
        :type config: TrainConfig
        :param scaler: scaler the pairs were transformed with
        :type scaler: MinMaxScaler
        :return: final model and its learning curve
        :rtype: tuple[MlpModel, LearningCurve]
        """
        x: np.ndarray = np.asarray(inputs, dtype=np.float64)
        y: np.ndarray = np.asarray(targets, dtype=np.float64).reshape(-1, 1)
        n_val: int = int(Decimal(repr(config.validation_fraction)) *
                         x.shape[0])
        n_train: int = x.shape[0] - n_val
        if n_train < MIN_TRAIN_PAIRS:
            raise InsufficientDataError(
                f"{n_train} training pairs after the validation split;"
                f" at least {MIN_TRAIN_PAIRS} are required")
        x_train, y_train = x[:n_train], y[:n_train]
        x_val, y_val = x[n_train:], y[n_train:]
        layer_sizes: list[int] = [x.shape[1], hidden_size, 1]
        rng: np.random.Generator = np.random.Generator(
            np.random.PCG64(config.rng_seed))
        weights, biases = AnnService._draw(layer_sizes, rng)

        def losses() -> tuple[float, Optional[float]]:
            train_loss: float = mlp.mean_squared_loss(weights, biases,
                                                      x_train, y_train)
            val_loss: Optional[float] = mlp.mean_squared_loss(
                weights, biases, x_val, y_val) if n_val else None
            return train_loss, val_loss

        rate: float = config.learning_rate
        previous_train, previous_val = losses()
        train_curve: list[float] = []
        val_curve: list[Optional[float]] = []
        for epoch in range(1, config.epochs + 1):
            snapshot: tuple[mlp.Layers, mlp.Layers] = (
                [w.copy() for w in weights], [b.copy() for b in biases])
            order: np.ndarray = rng.permutation(n_train)
            for start in range(0, n_train, config.batch_size):
                batch: np.ndarray = order[start:start + config.batch_size]
                activations: mlp.Layers = mlp.forward_pass(
                    weights, biases, x_train[batch])
                weight_grads, bias_grads = mlp.backward_pass(
                    weights, activations, y_train[batch])
                for layer, (w_grad, b_grad) in enumerate(
                        zip(weight_grads, bias_grads)):
                    weights[layer] -= rate * w_grad
                    biases[layer] -= rate * b_grad
            train_loss, val_loss = losses()
            if not math.isfinite(train_loss) or (
                    val_loss is not None and not math.isfinite(val_loss)):
                raise DivergenceError(epoch)
            if train_loss > previous_train:
                weights, biases = snapshot
                rate /= 2.0
                logger.warning("epoch %d raised the loss; learning rate"
                               " halved to %g", epoch, rate)
                train_loss, val_loss = previous_train, previous_val
            logger.debug("H=%d epoch %d: train %.6g, validation %s",
                         hidden_size, epoch, train_loss, val_loss)
            train_curve.append(train_loss)
            val_curve.append(val_loss)
            previous_train, previous_val = train_loss, val_loss
        model: MlpModel = AnnService._to_model(
            layer_sizes, weights, biases, scaler, config.rng_seed)
        return model, LearningCurve(train_loss=train_curve,
                                    val_loss=val_curve)

    @staticmethod
    def train_on_proxy(proxy, hidden_size: int, config: TrainConfig,
                       lookback: int = 5) -> tuple[MlpModel, LearningCurve]:
        """
        Fit the scaler on an in-sample proxy, window it and train
        :param proxy: in-sample squared returns
        :type proxy: array_like
        :param hidden_size: hidden neurons H
        :type hidden_size: int
        :param config: training settings
        :type config: TrainConfig
        :param lookback: window length
        :type lookback: int
        :return: final model and its learning curve
        :rtype: tuple[MlpModel, LearningCurve]
        """
        scaler: MinMaxScaler = AnnService.scaler_fit(proxy)
        inputs, targets = AnnService.make_windows(
            AnnService.scaler_apply(scaler, proxy), lookback)
        model, curve = AnnService.train(inputs, targets, hidden_size, config,
                                        scaler)
        logger.info("trained H=%d: final training loss %.6g", hidden_size,
                    curve.train_loss[-1])
        return model, curve

    @staticmethod
    def predict_one(model: MlpModel, last_values) -> float:
        """
        Next proxy value from the most recent lookback values
        :param model: trained network
        :type model: MlpModel
        :param last_values: latest proxy values in original units, oldest
         first
        :type last_values: array_like
        :return: sigma_{t+1}^2 in original units
        :rtype: float
        """
        scaled: np.ndarray = AnnService.scaler_apply(
            model.scaler, AnnService._check_input(model, last_values))
        return float(AnnService.scaler_invert(
            model.scaler, AnnService.forward(model, scaled)))

    @staticmethod
    def predict_many(model: MlpModel, windows: np.ndarray) -> np.ndarray:
        """
        Predictions for many windows in original units
        :param model: trained network
        :type model: MlpModel
        :param windows: one lookback window per row, original units
        :type windows: np.ndarray
        :return: one prediction per row
        :rtype: np.ndarray
        """
        weights, biases = model.arrays()
        scaled: np.ndarray = AnnService.scaler_apply(model.scaler, windows)
        output: np.ndarray = mlp.forward_pass(weights, biases, scaled)[-1]
        return AnnService.scaler_invert(model.scaler, output[:, 0])

    @staticmethod
    def sweep(proxy, hidden_sizes: list[int], config: TrainConfig,
              lookback: int = 5) -> tuple[SweepReport, dict[int, MlpModel],
                                          dict[int, LearningCurve]]:
        """
        Train one network per hidden size and report in-sample accuracy
        :param proxy: in-sample squared returns
        :type proxy: array_like
        :param hidden_sizes: H values to try
        :type hidden_sizes: list[int]
        :param config: training settings shared by every size
        :type config: TrainConfig
        :param lookback: window length
        :type lookback: int
        :return: sweep report, the models and their learning curves
        :rtype: tuple[SweepReport, dict[int, MlpModel],
         dict[int, LearningCurve]]
        """
        data: np.ndarray = np.asarray(proxy, dtype=np.float64)
        windows, realized = AnnService.make_windows(data, lookback)
        models: dict[int, MlpModel] = {}
        curves: dict[int, LearningCurve] = {}
        rows: list[ArchitectureReport] = []
        for size in hidden_sizes:
            model, curve = AnnService.train_on_proxy(data, size, config,
                                                     lookback)
            fitted: np.ndarray = AnnService.predict_many(model, windows)
            models[size], curves[size] = model, curve
            rows.append(ArchitectureReport(
                hidden_size=size, mae=MetricsService.mae(realized, fitted),
                mse=MetricsService.mse(realized, fitted),
                rmse=MetricsService.rmse(realized, fitted),
                final_train_loss=curve.train_loss[-1],
                final_val_loss=curve.val_loss[-1]))
        best: ArchitectureReport = min(rows, key=lambda r: (r.rmse,
                                                            r.hidden_size))
        logger.info("architecture sweep selected H=%d (RMSE %.6g)",
                    best.hidden_size, best.rmse)
        return SweepReport(lookback=lookback, train_config=config,
                           architectures=rows,
                           best_hidden_size=best.hidden_size), models, curves

    @staticmethod
    def save(model: MlpModel, path: Path) -> None:
        """
        Write the model as JSON
        :param model: network
        :type model: MlpModel
        :param path: destination file
        :type path: Path
        :return: None
        :rtype: NoneType
        """
        path.write_text(model.json(), encoding="utf-8")

    @staticmethod
    def load(path: Path) -> MlpModel:
        """
        Read a model written by save
        :param path: JSON file
        :type path: Path
        :return: network
        :rtype: MlpModel
        """
        try:
            return MlpModel.parse_file(path)
        except (ValidationError, ValueError, OSError) as exc:
            raise DataError(f"unreadable model file {path}: {exc}",
                            {"path": str(path)}) from exc
