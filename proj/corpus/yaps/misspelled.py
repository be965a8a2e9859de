import yaps


@yaps.model
def coin(x: int(lower=0, upper=1)[10]):
    theta: real(lower=0, upper=1) <~ uniform(0, 1)
    for i in range(1, 11):
        x[i] <~ bernoulli(thetap)
