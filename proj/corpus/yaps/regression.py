import yaps
from yaps.lib import int, real, vector

N = yaps.dependent_type_var()


@yaps.model
def regression(N: int(lower=0), x: vector(N), y: vector(N)):
    alpha: real <~ normal(0, 10)
    beta: real <~ normal(0, 10)
    sigma: real(lower=0) <~ cauchy(0, 5)
    y <~ normal(alpha + beta * x, sigma)
