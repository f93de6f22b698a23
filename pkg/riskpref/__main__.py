from riskpref.cli.main import main

main()
