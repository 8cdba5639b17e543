from ..yaml import b_c
import i3
