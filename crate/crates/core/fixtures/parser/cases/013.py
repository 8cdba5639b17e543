for i in []: import json,six
from ..requests import (client)
