from pandas import (
    client,
    b_c,
    x,
    parse,
)
import sys.client.request
