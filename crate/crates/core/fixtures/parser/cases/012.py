with open('f') as fh:
    from ..  import client as ux
    total = (1 +
             2)  # trailing import comment
    x = 1; import six as pd ,  requests.parse ,  json.core.pyplot as pd
f = lambda x: x + 1
import numpy
