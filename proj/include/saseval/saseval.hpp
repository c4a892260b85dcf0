#pragma once

#include "saseval/asil.hpp"
#include "saseval/coverage.hpp"
#include "saseval/derive.hpp"
#include "saseval/diagnostic.hpp"
#include "saseval/dsl/loader.hpp"
#include "saseval/dsl/lower.hpp"
#include "saseval/dsl/parser.hpp"
#include "saseval/dsl/printer.hpp"
#include "saseval/emit.hpp"
#include "saseval/error.hpp"
#include "saseval/model.hpp"
#include "saseval/stride.hpp"
#include "saseval/validate.hpp"
#include "saseval/vocabulary.hpp"
