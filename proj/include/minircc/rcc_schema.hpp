#pragma once

#include <string_view>

#include <asdl/schema.hpp>
#include <asdl/xml_form.hpp>

namespace minircc {

/// The bundled rcc grammar text, identical to fixtures/rcc.asdl.
std::string_view rcc_grammar_text();

/// The checked schema, parsed once per process.
const asdl::SchemaEnv& rcc_env();

/// Symbolic XML rendering for the operand-type suffix fields (F I U P B V).
const asdl::xml::Symbols& suffix_symbols();

}  // namespace minircc
