import kazoo.pyplot.pyplot as np; y = 2
for i in []: import six as np
with open('f') as fh:
    from . import b_c as pd
    # import commented_out
