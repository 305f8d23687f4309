"""
Neural network schemas for Pydantic models
"""
import math
from typing import Optional
import numpy as np
from pydantic import Field, root_validator
from schemas import FrozenModel


class MinMaxScaler(FrozenModel):
    """
    Affine map of the training range onto [0, 1].
    """
    min_val: float = Field(..., title='Minimum', description='Training min')
    max_val: float = Field(..., title='Maximum', description='Training max')

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_range(cls, values: dict) -> dict:
        """
        Non-degenerate range validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        if not values["max_val"] > values["min_val"]:
            raise ValueError("max_val must exceed min_val")
        return values

    @property
    def span(self) -> float:
        """
        Width of the training range
        :return: max_val - min_val
        :rtype: float
        """
        return self.max_val - self.min_val


class MlpModel(FrozenModel):
    """
    Single hidden layer perceptron with sigmoid units and its input scaler.
    """
    layer_sizes: list[int] = Field(
        ..., title='Layer sizes', description='Input, hidden and output')
    weights: list[list[list[float]]] = Field(
        ..., title='Weights',
        description='Row-major (to-neuron, from-neuron) matrix per layer')
    biases: list[list[float]] = Field(
        ..., title='Biases', description='One vector per non-input layer')
    scaler: MinMaxScaler = Field(..., title='Scaler')
    rng_seed: int = Field(default=0, title='Seed')

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_shapes(cls, values: dict) -> dict:
        """
        Weight and bias shapes validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        sizes: list[int] = values["layer_sizes"]
        if len(sizes) != 3 or sizes[-1] != 1 or min(sizes) < 1:
            raise ValueError("layer sizes must be (inputs, hidden, 1)")
        weights: list = values["weights"]
        biases: list = values["biases"]
        if len(weights) != 2 or len(biases) != 2:
            raise ValueError("expected two connection layers")
        for layer, (n_in, n_out) in enumerate(zip(sizes, sizes[1:])):
            matrix: np.ndarray = np.asarray(weights[layer], dtype=np.float64)
            if matrix.shape != (n_out, n_in) or \
                    len(biases[layer]) != n_out:
                raise ValueError(f"layer {layer + 1} does not map {n_in}"
                                 f" inputs to {n_out} outputs")
            if not np.all(np.isfinite(matrix)) or not all(
                    math.isfinite(b) for b in biases[layer]):
                raise ValueError(f"layer {layer + 1} has non-finite entries")
        return values

    @property
    def hidden_size(self) -> int:
        """
        Neurons in the hidden layer
        :return: H
        :rtype: int
        """
        return self.layer_sizes[1]

    def arrays(self) -> tuple[list[np.ndarray], list[np.ndarray]]:
        """
        Parameters as float64 arrays.
        :return: weight matrices and bias vectors
        :rtype: tuple[list[np.ndarray], list[np.ndarray]]
        """
        return ([np.asarray(w, dtype=np.float64) for w in self.weights],
                [np.asarray(b, dtype=np.float64) for b in self.biases])


class TrainConfig(FrozenModel):
    """
    Mini-batch gradient descent settings.
    """
    epochs: int = Field(default=60, title='Epochs', ge=1)
    learning_rate: float = Field(
        default=0.05, title='Learning rate', gt=0,
        description='Initial step; halved whenever an epoch raises the loss')
    batch_size: int = Field(default=32, title='Batch size', ge=1)
    validation_fraction: float = Field(
        default=0.10, title='Validation fraction', ge=0, lt=0.5,
        description='Chronological tail of the pairs held out')
    rng_seed: int = Field(default=0, title='Seed')

    class Config:
        """
        Config class for TrainConfig
        """
        schema_extra: dict[str, dict] = {
            "example": {"epochs": 60, "learning_rate": 0.05,
                        "batch_size": 32, "validation_fraction": 0.1,
                        "rng_seed": 0}
        }


class LearningCurve(FrozenModel):
    """
    Per-epoch mean squared error in scaled units.
    """
    train_loss: list[float] = Field(..., title='Training loss')
    val_loss: list[Optional[float]] = Field(
        ..., title='Validation loss',
        description='Empty entries when no validation pairs are held out')

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_losses(cls, values: dict) -> dict:
        """
        Equal length, non-negative losses validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        train: list[float] = values["train_loss"]
        val: list[Optional[float]] = values["val_loss"]
        if len(train) != len(val):
            raise ValueError("loss sequences must have equal lengths")
        if any(v < 0 for v in train) or any(
                v is not None and v < 0 for v in val):
            raise ValueError("losses must be non-negative")
        return values


class ArchitectureReport(FrozenModel):
    """
    In-sample fit of one hidden layer size, in original units.
    """
    hidden_size: int = Field(..., title='Hidden neurons', ge=1)
    mae: float = Field(..., title='MAE', ge=0)
    mse: float = Field(..., title='MSE', ge=0)
    rmse: float = Field(..., title='RMSE', ge=0)
    final_train_loss: float = Field(..., title='Final training loss')
    final_val_loss: Optional[float] = Field(
        default=None, title='Final validation loss')


class SweepReport(FrozenModel):
    """
    Architecture sweep over the hidden layer sizes tried.
    """
    lookback: int = Field(..., title='Lookback', ge=1)
    train_config: TrainConfig = Field(..., title='Training settings')
    architectures: list[ArchitectureReport] = Field(
        ..., title='Architectures')
    best_hidden_size: int = Field(
        ..., title='Selected size', description='Lowest in-sample RMSE')
