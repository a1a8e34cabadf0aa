#!/usr/bin/env python
from mqkd.bin.cli import main


if __name__ == "__main__":
    raise SystemExit(main())
