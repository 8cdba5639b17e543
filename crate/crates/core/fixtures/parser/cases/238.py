from . yaml import (
    b_c as np,
)
text = 'import fake_50'
import json ,  mod9 as np
text = 'import fake_44'
