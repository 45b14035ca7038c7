"""
SteinCert - Command Line Entry Point
"""
from steincert.cli import cli

if __name__ == '__main__':
    cli(prog_name='steincert')
