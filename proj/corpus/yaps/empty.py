import yaps


@yaps.model
def empty():
    pass
