#include "yaps/pipeline.hpp"

#include "yaps/block_inference.hpp"
#include "yaps/lower.hpp"
#include "yaps/scope_check.hpp"
#include "yaps/yaps_parser.hpp"

namespace yaps {

namespace {

void append(Diagnostics& into, Diagnostics from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

CompileResult finish(CompileResult result) {
  sort_diagnostics(result.diagnostics);
  if (has_errors(result.diagnostics)) result.program.reset();
  return result;
}

}  // namespace

CompileResult compile_yaps(std::string_view source, std::string_view file,
                           const CompileOptions& options) {
  CompileResult result;
  YapsParseResult parsed = parse_yaps_source(source, file, options.model_name);
  append(result.diagnostics, std::move(parsed.diagnostics));
  if (!parsed.model || has_errors(result.diagnostics)) return finish(std::move(result));
  result.model_name = parsed.model->name;

  const Builtins& builtins = options.builtins ? *options.builtins : Builtins::standard();
  append(result.diagnostics, check_scopes(*parsed.model, builtins));
  if (has_errors(result.diagnostics)) return finish(std::move(result));

  LowerResult lowered = lower(*parsed.model);
  append(result.diagnostics, std::move(lowered.diagnostics));
  if (has_errors(result.diagnostics)) return finish(std::move(result));

  if (auto* program = std::get_if<Program>(&lowered.output)) {
    result.program = std::move(*program);
  } else {
    BlockInferenceResult placed = infer_blocks(std::get<UnplacedModel>(lowered.output));
    append(result.diagnostics, std::move(placed.diagnostics));
    result.program = std::move(placed.program);
  }
  return finish(std::move(result));
}

}  // namespace yaps
