from uplbench.cli import main

main()
