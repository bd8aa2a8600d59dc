from functools import lru_cache

from exact1q.models.boolfn import TruthTable, parse_truth_table


# Все 16 функций двух переменных, индекс входа x1x2 = 00, 01, 10, 11
_TWO_VARIABLE = {
    'const0': '0000',
    'and2': '0001',
    'x1_and_not_x2': '0010',
    'x1': '0011',
    'not_x1_and_x2': '0100',
    'x2': '0101',
    'xor2': '0110',
    'or2': '0111',
    'nor2': '1000',
    'xnor2': '1001',
    'not_x2': '1010',
    'x1_or_not_x2': '1011',
    'not_x1': '1100',
    'not_x1_or_x2': '1101',
    'nand2': '1110',
    'const1': '1111',
}

_NAMED = {
    'deutsch': '0110',
    'majority3': '00010111',
    'fig2': '00000111',      # x1 and (x2 or x3)
    'parity3': '01101001',
    'dj2': '0110',
    'dj4': '0**1*11**11*1**0',
}


@lru_cache(maxsize=1)
def golden_corpus() -> dict[str, TruthTable]:
    '''Именованные таблицы для документации, тестов и аргументов CLI.'''
    tables = {**_TWO_VARIABLE, **_NAMED}
    return {name: parse_truth_table(text) for name, text in tables.items()}


def lookup(name: str) -> TruthTable | None:
    return golden_corpus().get(name)
