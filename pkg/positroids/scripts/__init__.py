from .bundle import bundle
from .configure import configure
from .enumerate import enumerate_strata
from .perm import perm
from .rankmat import rankmat
from .stratify import stratify
from .verify import verify
