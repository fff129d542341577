#pragma once

#include "polyroots/closed_form.hpp"
#include "polyroots/errors.hpp"
#include "polyroots/oracle.hpp"
#include "polyroots/poly_core.hpp"
#include "polyroots/quintic_pipeline.hpp"
#include "polyroots/report.hpp"
#include "polyroots/tschirnhaus_formulas.hpp"
#include "polyroots/tschirnhaus_quartic.hpp"
