import yaps


@yaps.model
def schools(J: int(lower=0), y: real[J], sigma: real(lower=0)[J]):
    with parameters:
        mu: real
        tau: real(lower=0)
        eta: vector(J)
    with transformed_parameters:
        theta: vector(J)
        theta = mu + tau * eta
    with model:
        eta <~ normal(0, 1)
        y <~ normal(theta, sigma)
