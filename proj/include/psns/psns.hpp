#pragma once

// Umbrella header.

#include "basis_family.hpp"
#include "binomial.hpp"
#include "checked.hpp"
#include "closed_forms.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "mora.hpp"
#include "order_table.hpp"
#include "params.hpp"
#include "report.hpp"
#include "unipoly.hpp"
