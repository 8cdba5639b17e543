from .. _private.client.core import (core, client as pd, core, core)
pass
s = f'{1 + 1} import not_real'
