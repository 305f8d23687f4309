"""
Perceptron algebra for sigmoid feedforward networks.

Weight matrices are stored (to-neuron, from-neuron), so layer l maps an
activation row a to expit(a @ W_l.T + b_l).
"""
import numpy as np
from scipy.special import expit

Layers = list[np.ndarray]


def forward_pass(weights: Layers, biases: Layers,
                 inputs: np.ndarray) -> Layers:
    """
    Activations of every layer for a batch of inputs.
    :param weights: one (n_out, n_in) matrix per connection layer
    :type weights: list[np.ndarray]
    :param biases: one vector per non-input layer
    :type biases: list[np.ndarray]
    :param inputs: batch of shape (m, n_in)
    :type inputs: np.ndarray
    :return: input batch followed by each layer's sigmoid output
    :rtype: list[np.ndarray]
    """
    activations: Layers = [inputs]
    for weight, bias in zip(weights, biases):
        activations.append(expit(activations[-1] @ weight.T + bias))
    return activations


def backward_pass(weights: Layers, activations: Layers,
                  targets: np.ndarray) -> tuple[Layers, Layers]:
    """
    Gradients of the batch mean of (target - output)^2.
    :param weights: connection matrices used in the forward pass
    :type weights: list[np.ndarray]
    :param activations: forward_pass output for the batch
    :type activations: list[np.ndarray]
    :param targets: batch of shape (m, n_out)
    :type targets: np.ndarray
    :return: weight gradients and bias gradients, layer by layer
    :rtype: tuple[list[np.ndarray], list[np.ndarray]]
    """
    size: int = targets.shape[0]
    output: np.ndarray = activations[-1]
    delta: np.ndarray = 2.0 * (output - targets) * output * (1.0 - output)
    weight_grads: Layers = [np.empty(0)] * len(weights)
    bias_grads: Layers = [np.empty(0)] * len(weights)
    for layer in range(len(weights) - 1, -1, -1):
        weight_grads[layer] = delta.T @ activations[layer] / size
        bias_grads[layer] = delta.sum(axis=0) / size
        if layer:
            hidden: np.ndarray = activations[layer]
            delta = (delta @ weights[layer]) * hidden * (1.0 - hidden)
    return weight_grads, bias_grads


def mean_squared_loss(weights: Layers, biases: Layers, inputs: np.ndarray,
                      targets: np.ndarray) -> float:
    """
    Mean per-sample squared error of the network on a data set.
    :param weights: connection matrices
    :type weights: list[np.ndarray]
    :param biases: bias vectors
    :type biases: list[np.ndarray]
    :param inputs: samples of shape (m, n_in)
    :type inputs: np.ndarray
    :param targets: targets of shape (m, n_out)
    :type targets: np.ndarray
    :return: mean of (target - output)^2
    :rtype: float
    """
    output: np.ndarray = forward_pass(weights, biases, inputs)[-1]
    return float(np.mean((targets - output) ** 2))
