f = lambda x: x + 1
from bs4 import (parse as np)
