"""
Lark grammars for `.folp` programs and `.dl` knowledge bases.
"""

from functools import lru_cache

import lark

FOLP_GRAMMAR = r"""
    start: statement*

    statement: [label] clause "."
    label: NAME ":"

    ?clause: free_rule
           | constraint
           | definite

    free_rule: atom "v" "not" atom
    constraint: ":-" body
    definite: atom [":-" body]

    body: item ("," item)*
    ?item: atom
         | negated
         | inequality
    negated: "not" atom
    inequality: term "!=" term

    atom: pred "(" term ("," term)* ")"
    pred: NAME
        | STRING
    term: NAME

    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    STRING: /"(\\.|[^"\\])*"/
    COMMENT: /%[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

DL_GRAMMAR = r"""
    start: axiom*

    ?axiom: concept "<=" concept      -> concept_inclusion
          | ROLE "<=" ROLE            -> role_inclusion
          | "trans" "(" ROLE ")"      -> transitivity

    ?concept: disjunction
    ?disjunction: conjunction
                | disjunction "or" conjunction      -> or_
    ?conjunction: unary
                | conjunction "and" unary           -> and_
    ?unary: "not" unary                             -> not_
          | "exists" ROLE "." unary                 -> exists
          | "forall" ROLE "." unary                 -> forall
          | "atleast" INT ROLE "." unary            -> atleast
          | "atmost" INT ROLE "." unary             -> atmost
          | primary
    ?primary: CONCEPT                               -> atomic
            | "{" ROLE "}"                          -> nominal
            | "(" concept ")"

    CONCEPT: /[A-Z][A-Za-z0-9_]*/
    ROLE: /[a-z][A-Za-z0-9_]*/
    COMMENT: /%[^\n]*/

    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@lru_cache(maxsize=None)
def folp_parser() -> lark.Lark:
    return lark.Lark(FOLP_GRAMMAR, parser="lalr", propagate_positions=True, maybe_placeholders=True)


@lru_cache(maxsize=None)
def dl_parser() -> lark.Lark:
    return lark.Lark(DL_GRAMMAR, parser="lalr", propagate_positions=True)
