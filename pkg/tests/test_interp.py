import pytest

from kisp.interp import (
    VACANT,
    VOID,
    Application,
    Define,
    Interpreter,
    KEYWORDS,
    KispError,
    KispLexError,
    KispParseError,
    KispRuntimeError,
    Lambda,
    Literal,
    PersonRef,
    Reference,
    format_value,
    kisp_equal,
    parse_program,
    tokenize,
)
from kisp.semantics import eval_term
from kisp.temporal import Timeline, parse_date
from kisp.terms import parse_kin_term


def run(interp, src):
    return interp.eval_text(src)


# --- lexer ---------------------------------------------------------------------


def test_tokenize_simple_application():
    kinds = [(t.kind, t.value) for t in tokenize("(+ 2 3)")]
    assert kinds == [("(", "("), ("name", "+"), ("numeral", 2), ("numeral", 3), (")", ")")]


def test_tokenize_string_with_punctuation():
    tokens = tokenize("'Hello, World!'")
    assert [(t.kind, t.value) for t in tokens] == [("string", "Hello, World!")]


def test_tokenize_empty_string_literal():
    assert tokenize("''")[0].value == ""


def test_numerals_zero_prefixed_and_negative():
    assert tokenize("007")[0].value == 7
    assert tokenize("-5")[0].value == -5
    assert tokenize("-0")[0].value == 0


def test_dash_case_and_question_mark_references():
    assert tokenize("long-name")[0] .value == "long-name"
    assert tokenize("very-long-name")[0].value == "very-long-name"
    assert tokenize("married?")[0].value == "married?"
    assert tokenize("is-happy?")[0].value == "is-happy?"


def test_leading_dash_reference_rejected():
    with pytest.raises(KispLexError):
        tokenize("-illegal")


@pytest.mark.parametrize("bad", ["trailing-", "mid--dash", "ab?c", "a_b", "1abc", "--", "?"])
def test_malformed_words_rejected(bad):
    with pytest.raises(KispLexError):
        tokenize(bad)


def test_unterminated_string_rejected():
    with pytest.raises(KispLexError):
        tokenize("'oops")
    with pytest.raises(KispLexError):
        tokenize("'line\nbreak'")


def test_non_ascii_in_string_rejected():
    with pytest.raises(KispLexError):
        tokenize("'café'")


def test_token_positions():
    tok = tokenize("(+\n   weird)")[2]
    assert (tok.line, tok.col) == (2, 4)


# --- parser ---------------------------------------------------------------------


def test_parse_define_at_top_level():
    (node,) = parse_program("(define three 3)")
    assert node == Define("three", Literal(3, 1, 15), 1, 1)


def test_nested_define_rejected():
    with pytest.raises(KispParseError):
        parse_program("(+ 2 (define three 3))")


def test_define_inside_lambda_rejected():
    with pytest.raises(KispParseError):
        parse_program("(lambda (x) (define y x))")


def test_empty_parens_rejected():
    with pytest.raises(KispParseError):
        parse_program("()")


def test_niladic_lambda_allowed():
    (node,) = parse_program("(lambda () 'Hello, World!')")
    assert isinstance(node, Lambda)
    assert node.params == ()


def test_lambda_body_is_single_term():
    with pytest.raises(KispParseError):
        parse_program("(lambda (x) x x)")
    with pytest.raises(KispParseError):
        parse_program("(lambda (x))")


def test_duplicate_lambda_parameter_rejected():
    with pytest.raises(KispParseError):
        parse_program("(lambda (x x) x)")


def test_if_requires_three_operands():
    with pytest.raises(KispParseError):
        parse_program("(if true 1)")
    with pytest.raises(KispParseError):
        parse_program("(if true 1 2 3)")


def test_and_or_need_two_operands():
    with pytest.raises(KispParseError):
        parse_program("(and true)")
    with pytest.raises(KispParseError):
        parse_program("(or false)")


@pytest.mark.parametrize("keyword", sorted(KEYWORDS))
def test_keywords_unshadowable(keyword):
    with pytest.raises(KispParseError):
        parse_program(f"(define {keyword} 1)")
    with pytest.raises(KispParseError):
        parse_program(f"(lambda ({keyword}) 1)")


@pytest.mark.parametrize("word", ["and", "or"])
def test_short_circuit_names_reserved(word):
    with pytest.raises(KispParseError):
        parse_program(f"(define {word} 1)")
    with pytest.raises(KispParseError):
        parse_program(f"(lambda ({word}) 1)")
    with pytest.raises(KispParseError):
        parse_program(f"(list {word})")


def test_unbalanced_parens_rejected():
    with pytest.raises(KispParseError):
        parse_program("(+ 1 2")
    with pytest.raises(KispParseError):
        parse_program("(+ 1 2))")


def test_application_shape():
    (node,) = parse_program("(f a 1)")
    assert isinstance(node, Application)
    assert node.head == Reference("f", 1, 2)
    assert len(node.args) == 2


# --- evaluation ------------------------------------------------------------------


@pytest.fixture
def bare():
    return Interpreter()


def test_arithmetic(bare):
    assert run(bare, "(+ 2 3)") == 5
    assert run(bare, "(+ 1 2 3 4)") == 10
    assert run(bare, "(- 10 4)") == 6
    assert run(bare, "(* 6 7)") == 42
    assert run(bare, "(< 1 2)") is True
    assert run(bare, "(< 2 1)") is False
    assert run(bare, "(inc 41)") == 42


def test_arbitrary_precision(bare):
    assert run(bare, "(* 4611686018427387904 4)") == 2**64
    assert run(bare, "(+ 9223372036854775807 1)") == 2**63


def test_literals(bare):
    assert run(bare, "true") is True
    assert run(bare, "false") is False
    assert run(bare, "void") is VOID
    assert run(bare, "vacant") == VACANT
    assert run(bare, "007") == 7
    assert run(bare, "'text'") == "text"


def test_define_then_use(bare):
    assert bare.eval_text("(define three 3) (+ three three)") == 6


def test_define_returns_void(bare):
    assert bare.eval_text("(define x 1)") is VOID


def test_lambda_application_and_closures(bare):
    assert run(bare, "((lambda (x y) (+ x y)) 2 3)") == 5
    assert run(bare, "((lambda () 'Hello, World!'))") == "Hello, World!"
    # captured environment, not dynamic scope
    src = """
    (define make-adder (lambda (n) (lambda (x) (+ x n))))
    (define add-two (make-adder 2))
    (add-two 40)
    """
    assert bare.eval_text(src) == 42


def test_higher_order_prelude(bare):
    assert run(bare, "((twice square) 2)") == 16
    assert run(bare, "((compose inc inc) 0)") == 2


def test_if_evaluates_single_branch(bare):
    assert run(bare, "(if true 1 undefined-ref)") == 1
    assert run(bare, "(if false undefined-ref 2)") == 2
    with pytest.raises(KispRuntimeError):
        run(bare, "(if 1 2 3)")  # condition must be boolean


def test_and_or_short_circuit(bare):
    assert run(bare, "(and false undefined-ref)") is False
    assert run(bare, "(or true undefined-ref)") is True
    assert run(bare, "(and true true false)") is False
    assert run(bare, "(or false false true)") is True
    with pytest.raises(KispRuntimeError):
        run(bare, "(and true 1)")


def test_equality_is_structural_and_cross_type_false(bare):
    assert run(bare, "(= 3 3)") is True
    assert run(bare, "(= 'a' 'a')") is True
    assert run(bare, "(= (list 1 2) (list 1 2))") is True
    assert run(bare, "(= void void)") is True
    assert run(bare, "(= vacant vacant)") is True
    assert run(bare, "(= void vacant)") is False
    assert run(bare, "(= 1 true)") is False
    assert run(bare, "(= 0 false)") is False
    assert run(bare, "(= 'MALE' 1)") is False
    assert run(bare, "(= (list 1) (list 1 1))") is False


def test_kisp_equal_bool_vs_int():
    assert not kisp_equal(True, 1)
    assert not kisp_equal(0, False)
    assert kisp_equal((True,), (True,))
    assert not kisp_equal((True,), (1,))


def test_list_builtins(bare):
    assert run(bare, "(list 1 2 3)") == (1, 2, 3)
    assert run(bare, "(list)") == ()
    assert run(bare, "(append (list 1 2) (list 3) vacant)") == (1, 2, 3)
    assert run(bare, "(concat 'foo' '-' 'bar')") == "foo-bar"
    assert run(bare, "(join (list 1 2) (list 2 3))") == (1, 2, 3)
    assert run(bare, "(join (list true) (list 1))") == (True, 1)
    assert run(bare, "(count (list 1 2 3))") == 3
    assert run(bare, "(count vacant)") == 0


def test_filter_and_map(bare):
    assert run(bare, "(filter (lambda (x) (< 1 x)) (list 1 2 3))") == (2, 3)
    assert run(bare, "(map inc (list 1 2 3))") == (2, 3, 4)
    with pytest.raises(KispRuntimeError):
        run(bare, "(filter (lambda (x) x) (list 1))")  # non-boolean predicate


def test_not(bare):
    assert run(bare, "(not true)") is False
    assert run(bare, "(not false)") is True
    with pytest.raises(KispRuntimeError):
        run(bare, "(not 0)")


def test_runtime_errors_carry_position(bare):
    with pytest.raises(KispRuntimeError) as exc:
        run(bare, "(+ 1\n   missing)")
    assert (exc.value.line, exc.value.col) == (2, 4)


def test_unbound_reference(bare):
    with pytest.raises(KispRuntimeError):
        run(bare, "nope")


def test_apply_non_function(bare):
    with pytest.raises(KispRuntimeError):
        run(bare, "(3 4)")


def test_arity_mismatch(bare):
    with pytest.raises(KispRuntimeError):
        run(bare, "((lambda (x) x) 1 2)")
    with pytest.raises(KispRuntimeError):
        run(bare, "(inc)")
    with pytest.raises(KispRuntimeError):
        run(bare, "(- 1)")


def test_builtins_are_rebindable_but_keywords_are_not(bare):
    # only the nine keywords (plus and/or) are off limits
    assert bare.eval_text("(define inc (lambda (x) (+ x 10))) (inc 1)") == 11


def test_redefinition_takes_effect(bare):
    assert bare.eval_text("(define x 1) (define x 2) x") == 2


# --- tree-backed evaluation --------------------------------------------------------


def test_people_ordering(interp):
    people = run(interp, "people")
    assert people == tuple(
        PersonRef(i) for i in ["adam", "eve", "bob", "dana", "carl", "eli", "fay", "hank"]
    )


def test_now_binding(interp):
    assert run(interp, "now") == parse_date("01.01.2000")
    assert run(interp, "(past (date '01.09.1939'))") is True
    assert run(interp, "(future (date '02.01.2000'))") is True
    assert run(interp, "(past now)") is False
    assert run(interp, "(future now)") is False


def test_ego_binding(interp):
    assert run(interp, "ego") == PersonRef("eli")


def test_unknown_ego_rejected(smith_tree):
    from kisp.tree import UnknownPersonError

    with pytest.raises(UnknownPersonError):
        Interpreter(smith_tree, ego="ghost")


def test_accessors_on_single_person(interp):
    assert run(interp, "(father ego)") == (PersonRef("bob"),)
    assert run(interp, "(mother ego)") == (PersonRef("dana"),)
    assert run(interp, "(children ego)") == ()
    assert run(interp, "(spouse ego)") == ()


def test_accessors_lift_over_lists(interp):
    interp.globals.bind("pair", (PersonRef("bob"), PersonRef("dana")))
    # both parents map to the same children; result is deduplicated
    assert run(interp, "(children pair)") == (PersonRef("eli"), PersonRef("fay"))
    interp.globals.bind("brothers", (PersonRef("bob"), PersonRef("carl")))
    assert run(interp, "(father brothers)") == (PersonRef("adam"),)


def test_accessor_results_in_tree_order(interp):
    interp.globals.bind("reversed-pair", (PersonRef("dana"), PersonRef("bob")))
    assert run(interp, "(children reversed-pair)") == (PersonRef("eli"), PersonRef("fay"))


def test_sex_specific_accessors(interp):
    interp.globals.bind("adam-ref", PersonRef("adam"))
    assert run(interp, "(son adam-ref)") == (PersonRef("bob"), PersonRef("carl"))
    assert run(interp, "(daughter adam-ref)") == ()
    interp.globals.bind("eve-ref", PersonRef("eve"))
    assert run(interp, "(husband eve-ref)") == (PersonRef("adam"),)
    assert run(interp, "(wife eve-ref)") == ()


def test_attr(interp):
    assert run(interp, "(attr ego 'name')") == "Eli Smith"
    assert run(interp, "(attr ego 'sex')") == "MALE"
    assert run(interp, "(attr ego 'birthdate')") == parse_date("11.03.1990")
    assert run(interp, "(attr ego 'birthplace')") == "Springfield"
    interp.globals.bind("carl-ref", PersonRef("carl"))
    assert run(interp, "(attr carl-ref 'birthplace')") is VOID
    with pytest.raises(KispRuntimeError):
        run(interp, "(attr ego 'shoe-size')")


def test_date_builtin(interp):
    assert run(interp, "(date '01.09.1939')") == parse_date("01.09.1939")
    with pytest.raises(KispRuntimeError):
        run(interp, "(date 'yesterday')")


def test_temporal_builtins(interp):
    assert run(interp, "(before (date '01.09.1939') (date '02.09.1945'))") is True
    assert run(interp, "(after (date '02.09.1945') (date '01.09.1939'))") is True
    assert (
        run(interp, "(during (date '01.01.1941') (date '01.09.1939') (date '02.09.1945'))")
        is True
    )


def test_accessors_agree_with_kin_semantics(interp, smith_tree):
    interp.eval_text("(define parents (lambda (p) (join (mother p) (father p))))")
    term = parse_kin_term("father | mother")
    for p in smith_tree.persons:
        interp.globals.bind("subject", PersonRef(p.id))
        got = {ref.id for ref in run(interp, "(parents subject)")}
        assert got == eval_term(smith_tree, term, {p.id})


def test_accessors_require_tree():
    bare = Interpreter()
    bare.globals.bind("someone", PersonRef("x"))
    with pytest.raises(KispRuntimeError):
        bare.eval_text("(children someone)")


def test_evaluation_is_deterministic(smith_tree):
    src = """
    (define parents (lambda (p) (join (mother p) (father p))))
    (filter (lambda (p) (< 0 (count (parents p)))) people)
    ((twice square) 2)
    """
    outputs = []
    for _ in range(2):
        interp = Interpreter(smith_tree, Timeline(parse_date("01.01.2000")), ego="eli")
        outputs.append("\n".join(interp.script_output(src)))
    assert outputs[0] == outputs[1]


# --- printing -------------------------------------------------------------------


def test_format_value_cases(interp):
    assert format_value(True) == "true"
    assert format_value(False) == "false"
    assert format_value(42) == "42"
    assert format_value(-5) == "-5"
    assert format_value("hi") == "'hi'"
    assert format_value(VOID) == "void"
    assert format_value(()) == "()"
    assert format_value((1, "a", VOID)) == "(1 'a' void)"
    assert format_value(PersonRef("bob")) == "bob"
    assert format_value(parse_date("01.09.1939")) == "01.09.1939"
    assert format_value(run(interp, "(lambda (x) x)")) == "<function>"
    assert format_value(run(interp, "inc")) == "<builtin inc>"


def test_script_output_skips_defines(interp):
    lines = interp.script_output("(define x 3) (+ x 1) 'done'")
    assert lines == ["4", "'done'"]


def test_script_error_aborts(interp):
    with pytest.raises(KispError):
        interp.eval_program("(+ 1 2) (boom) (+ 3 4)")
