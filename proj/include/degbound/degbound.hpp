#pragma once

#include "degbound/audit.hpp"
#include "degbound/canonical.hpp"
#include "degbound/catalog.hpp"
#include "degbound/chromatic.hpp"
#include "degbound/closed_forms.hpp"
#include "degbound/coeff.hpp"
#include "degbound/enumerate.hpp"
#include "degbound/errors.hpp"
#include "degbound/graph.hpp"
#include "degbound/graph6.hpp"
#include "degbound/indices.hpp"
#include "degbound/proof_kernel.hpp"
