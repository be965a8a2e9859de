import yaps


@yaps.model
def standardized(N: int(lower=1), y: vector(N)):
    y_mean: real
    y_mean = mean(y)
    mu: real <~ normal(0, 10)
    sigma: real(lower=0) <~ exponential(1)
    y <~ normal(mu + y_mean, sigma)
    y_rep: real
    y_rep = normal_rng(mu + y_mean, sigma)
