try:
    from .hamgen_cli import main
except ImportError:
    from hamgen_cli import main


raise SystemExit(main())
